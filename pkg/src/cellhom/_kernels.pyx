# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels on dense int64 / uint64 buffers.

Integer arithmetic is overflow-checked: an overflow raises OverflowError and
the caller redoes the matrix with arbitrary-precision integers.
"""
cimport cython
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t

cnp.import_array()


cdef inline int64_t _abs(int64_t x) nogil:
    return -x if x < 0 else x


@cython.overflowcheck(True)
cdef int64_t _axpy_row(int64_t[:, ::1] a, Py_ssize_t dst, Py_ssize_t src,
                       int64_t q, Py_ssize_t start, Py_ssize_t n) except? -1:
    cdef Py_ssize_t j
    for j in range(start, n):
        if a[src, j] != 0:
            a[dst, j] = a[dst, j] - q * a[src, j]
    return 0


@cython.overflowcheck(True)
cdef int64_t _axpy_col(int64_t[:, ::1] a, Py_ssize_t dst, Py_ssize_t src,
                       int64_t q, Py_ssize_t start, Py_ssize_t m) except? -1:
    cdef Py_ssize_t i
    for i in range(start, m):
        if a[i, src] != 0:
            a[i, dst] = a[i, dst] - q * a[i, src]
    return 0


cdef inline int64_t _floordiv(int64_t a, int64_t b) nogil:
    cdef int64_t q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def smith_diagonal_dense(int64_t[:, ::1] a):
    """Nonzero diagonal (absolute values) of a diagonal form of ``a``.

    ``a`` is modified in place.
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t t = 0, i, j, bi, bj
    cdef int64_t best, v, p, q
    cdef bint clean
    diag = []
    while t < m and t < n:
        best = 0
        bi = -1
        bj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = _abs(a[i, j])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    bi = i
                    bj = j
                    if v == 1:
                        break
            if best == 1:
                break
        if best == 0:
            break
        while True:
            # move the pivot to (t, t)
            if bi != t:
                for j in range(t, n):
                    a[t, j], a[bi, j] = a[bi, j], a[t, j]
            if bj != t:
                for i in range(t, m):
                    a[i, t], a[i, bj] = a[i, bj], a[i, t]
            p = a[t, t]
            clean = True
            for i in range(t + 1, m):
                if a[i, t] != 0:
                    q = _floordiv(a[i, t], p)
                    _axpy_row(a, i, t, q, t, n)
                    if a[i, t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if a[t, j] != 0:
                    q = _floordiv(a[t, j], p)
                    _axpy_col(a, j, t, q, t, m)
                    if a[t, j] != 0:
                        clean = False
            if clean:
                break
            best = 0
            for i in range(t + 1, m):
                v = _abs(a[i, t])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    bi = i
                    bj = t
            for j in range(t + 1, n):
                v = _abs(a[t, j])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    bi = t
                    bj = j
        diag.append(_abs(a[t, t]))
        t += 1
    return diag


def rank_mod2_packed(uint64_t[:, ::1] rows, Py_ssize_t ncols):
    """Rank over GF(2) of a matrix whose rows are packed into 64-bit words.

    ``rows`` is modified in place.
    """
    cdef Py_ssize_t m = rows.shape[0], nw = rows.shape[1]
    cdef Py_ssize_t r = 0, c, i, k, w, piv
    cdef uint64_t bit
    for c in range(ncols):
        if r == m:
            break
        w = c >> 6
        bit = (<uint64_t>1) << (c & 63)
        piv = -1
        for i in range(r, m):
            if rows[i, w] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(nw):
                rows[r, k], rows[piv, k] = rows[piv, k], rows[r, k]
        for i in range(r + 1, m):
            if rows[i, w] & bit:
                for k in range(w, nw):
                    rows[i, k] ^= rows[r, k]
        r += 1
    return r
