"""Kernel backend selection.

Prefers the compiled extension when it importable; falls back to the pure
Python implementation otherwise.  Set ``DUNKLWEYL_PURE=1`` to force the pure
backend (useful for benchmarking and for debugging the compiled one).
"""

import os

if os.environ.get("DUNKLWEYL_PURE"):
    from dunklweyl._kernel import pykernel as _impl
else:
    try:
        from dunklweyl._kernel import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from dunklweyl._kernel import pykernel as _impl

BACKEND = _impl.BACKEND

BN_ZERO = _impl.BN_ZERO
BN_ONE = _impl.BN_ONE
bn_make = _impl.bn_make
bn_add = _impl.bn_add
bn_sub = _impl.bn_sub
bn_neg = _impl.bn_neg
bn_mul = _impl.bn_mul
bn_scale_int = _impl.bn_scale_int
bn_conj = _impl.bn_conj

poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_mul = _impl.poly_mul
poly_scale = _impl.poly_scale
poly_scale_int = _impl.poly_scale_int

op_add = _impl.op_add
op_sub = _impl.op_sub
op_scale = _impl.op_scale
op_mul = _impl.op_mul

dx_rows = _impl._dx_rows
