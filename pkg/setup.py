"""Builds the optional compiled kernel.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time), so the build degrades
gracefully when Cython is unavailable.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dunklweyl/_kernel/_core.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
