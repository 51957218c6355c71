"""Exact operator algebra for the reflection-extended Weyl algebra."""

from dunklweyl._kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
