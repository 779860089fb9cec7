"""Selects the compiled kernels when available, else the pure-Python twin.

Set ``FREESORT_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("FREESORT_PURE_PYTHON"):
    from freesort import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from freesort import _kernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        from freesort import _kernels_py as _impl
        BACKEND = "python"

fold_word = _impl.fold_word
invariance_sweep = _impl.invariance_sweep
total_order_codes = _impl.total_order_codes

__all__ = ["BACKEND", "fold_word", "invariance_sweep", "total_order_codes"]
