"""Backend selection for the counting kernels.

The compiled extension is used when it imports; set ``RAINBOWMULT_PURE_PYTHON=1``
to force the pure-Python implementation.
"""
import os

from . import _pykernels

if os.environ.get("RAINBOWMULT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"

count_extensions = _impl.count_extensions

__all__ = ["BACKEND", "count_extensions"]
