# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of _kernels_py: same API, typed loops over Python scalars.

Scalar arithmetic stays in Python objects (exact Fractions / cyclotomic
residues), so the wins come from compiling away interpreter overhead in the
triple loops.  Keep this file line-for-line equivalent in behaviour to
_kernels_py.py.
"""

IMPLEMENTATION = "cython"


def rref_in_place(list rows, Py_ssize_t ncols, score):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef list prow, row
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        best = -1
        best_key = None
        for i in range(r, nrows):
            e = (<list>rows[i])[c]
            if e:
                key = score(e)
                if best < 0 or key < best_key:
                    best = i
                    best_key = key
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        prow = <list>rows[r]
        p = prow[c]
        if p != 1:
            inv = 1 / p
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            f = row[c]
            if not f:
                continue
            for j in range(c, ncols):
                pj = prow[j]
                if pj:
                    row[j] = row[j] - f * pj
        pivots.append(c)
        r += 1
    return pivots


def matmul(list a_rows, list b_rows, zero):
    if not a_rows:
        return []
    cdef Py_ssize_t n = len(a_rows)
    cdef Py_ssize_t k = len(b_rows)
    cdef Py_ssize_t m = len(<list>b_rows[0]) if k else 0
    cdef Py_ssize_t i, t, j
    cdef list arow, orow, brow
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        arow = <list>a_rows[i]
        orow = <list>out[i]
        for t in range(k):
            ait = arow[t]
            if not ait:
                continue
            brow = <list>b_rows[t]
            for j in range(m):
                btj = brow[j]
                if btj:
                    orow[j] = orow[j] + ait * btj
    return out


def kernel_from_rref(list rows, pivots, Py_ssize_t ncols, zero, one):
    cdef Py_ssize_t c, r
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            e = (<list>rows[r])[f]
            if e:
                v[p] = -e
        basis.append(v)
    return basis
