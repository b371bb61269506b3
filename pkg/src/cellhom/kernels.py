"""Backend selection for the elimination kernels.

The compiled extension ``cellhom._kernels`` is used when it imports; setting
``CELLHOM_PURE_PYTHON=1`` forces the pure-Python fallback.  Any int64
overflow in the compiled path falls back to Python integers for that matrix.
"""
from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("CELLHOM_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    import numpy as np

    from . import _kernels as _ext
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"

# entries above this never go to the int64 kernel
_INT64_SAFE = 1 << 31


def available_backends() -> list[str]:
    return ["cython", "python"] if _ext is not None else ["python"]


def _pick(backend):
    if backend is None:
        return BACKEND
    if backend not in available_backends():
        raise ValueError(f"backend {backend!r} not available")
    return backend


def _coo(entries):
    keys = np.fromiter((k for rc in entries for k in rc), dtype=np.int64, count=2 * len(entries))
    vals = np.fromiter(entries.values(), dtype=object, count=len(entries))
    return keys[0::2], keys[1::2], vals


def smith_diagonal(entries, nrows, ncols, backend=None) -> list[int]:
    if _pick(backend) == "cython" and all(-_INT64_SAFE < v < _INT64_SAFE for v in entries.values()):
        a = np.zeros((nrows, ncols), dtype=np.int64)
        if entries:
            r, c, v = _coo(entries)
            a[r, c] = v.astype(np.int64)
        try:
            return [int(x) for x in _ext.smith_diagonal_dense(a)]
        except OverflowError:
            pass
    return _kernels_py.smith_diagonal(entries, nrows, ncols)


def rank_mod2(entries, nrows, ncols, backend=None) -> int:
    if _pick(backend) == "cython":
        odd = {k: 1 for k, v in entries.items() if v & 1}
        if not odd:
            return 0
        nw = (ncols + 63) // 64
        a = np.zeros((nrows, nw), dtype=np.uint64)
        r, c, _ = _coo(odd)
        bits = np.left_shift(np.uint64(1), (c & 63).astype(np.uint64))
        np.bitwise_or.at(a, (r, c >> 6), bits)
        return int(_ext.rank_mod2_packed(a, ncols))
    return _kernels_py.rank_mod2(entries, nrows, ncols)
