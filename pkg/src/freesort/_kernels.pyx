# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the exhaustive sweeps.

Every function here has a line-for-line twin in ``_kernels_py``; the two
are checked against each other in the test-suite.

Conventions: a finite monoid on ``0..k-1`` is a flat ``int64`` table with
``table[x * k + y] == x * y`` plus its unit. Folds are right folds,
``x0 * (x1 * (... * unit))``, matching the recursive extension.
"""
import numpy as np

cdef inline long long _fold(const long long[:, ::1] words, Py_ssize_t row,
                            const long long[:, ::1] perms, Py_ssize_t prow,
                            Py_ssize_t n, const long long[::1] table,
                            long long k, long long unit) noexcept nogil:
    cdef long long acc = unit
    cdef Py_ssize_t i, idx
    for i in range(n - 1, -1, -1):
        idx = i if prow < 0 else perms[prow, i]
        acc = table[words[row, idx] * k + acc]
    return acc


def fold_word(word, table, long long k, long long unit):
    """Right fold of ``word`` (target elements) through a tabulated monoid."""
    cdef const long long[::1] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef long long acc = unit
    cdef Py_ssize_t i
    cdef long long[::1] w = np.ascontiguousarray(word, dtype=np.int64)
    for i in range(w.shape[0] - 1, -1, -1):
        acc = t[w[i] * k + acc]
    return acc


def invariance_sweep(words, perms, table, long long k, long long unit):
    """First ``(row, perm)`` with ``fold(words[row]) != fold(words[row] o perm)``.

    ``words`` is ``(rows, n)`` and ``perms`` is ``(p, n)``; permuted row
    ``r`` reads ``words[r, perm[i]]`` at position ``i``. Returns ``None``
    when every row is invariant under every permutation.
    """
    cdef const long long[:, ::1] w = np.ascontiguousarray(words, dtype=np.int64)
    cdef const long long[:, ::1] p = np.ascontiguousarray(perms, dtype=np.int64)
    cdef const long long[::1] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef Py_ssize_t rows = w.shape[0], n = w.shape[1], np_ = p.shape[0]
    cdef Py_ssize_t r, j
    cdef long long base
    cdef Py_ssize_t bad_r = -1, bad_j = -1
    if n != p.shape[1] and rows > 0 and np_ > 0:
        raise ValueError("word length and permutation size differ")
    with nogil:
        for r in range(rows):
            base = _fold(w, r, p, -1, n, t, k, unit)
            for j in range(np_):
                if _fold(w, r, p, j, n, t, k, unit) != base:
                    bad_r = r
                    bad_j = j
                    break
            if bad_r >= 0:
                break
    if bad_r < 0:
        return None
    return (int(bad_r), int(bad_j))


cdef bint _is_total_order(unsigned long long code, int n) noexcept nogil:
    cdef int x, y, z
    for x in range(n):
        if not (code >> (x * n + x)) & 1:
            return False
    for x in range(n):
        for y in range(n):
            if x != y:
                if ((code >> (x * n + y)) & 1) == ((code >> (y * n + x)) & 1):
                    # both: antisymmetry broken; neither: totality broken
                    return False
    for x in range(n):
        for y in range(n):
            if (code >> (x * n + y)) & 1:
                for z in range(n):
                    if (code >> (y * n + z)) & 1 and not (code >> (x * n + z)) & 1:
                        return False
    return True


def total_order_codes(int n):
    """All ``n*n`` bit-tables that are total orders, by brute-force filtering.

    Bit ``x*n + y`` of a code is ``leq(x, y)``. Codes come out ascending.
    """
    if n < 0 or n * n > 63:
        raise ValueError("table does not fit in 64 bits")
    cdef unsigned long long code, top = 1ULL << (n * n)
    out = []
    for code in range(top):
        if _is_total_order(code, n):
            out.append(int(code))
    return out
