"""Pure-Python row reduction and matrix product inner loops.

This is the fallback twin of the compiled ``_kernels`` extension; the two
must stay behaviourally identical (see tests/test_kernels.py).  Scalars are
duck typed: anything supporting ``+ - * /``, truthiness and ``==`` works,
which covers Fraction and CycScalar.
"""

IMPLEMENTATION = "python"


def rref_in_place(rows, ncols, score):
    """Reduce ``rows`` to reduced row echelon form; return pivot columns.

    ``score(x)`` returns an orderable key; among candidate pivots for a
    column the row whose entry has the smallest score is chosen (ties go to
    the lowest row index), which keeps denominators small and makes the
    reduction deterministic.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = -1
        best_key = None
        for i in range(r, nrows):
            e = rows[i][c]
            if e:
                key = score(e)
                if best < 0 or key < best_key:
                    best = i
                    best_key = key
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        prow = rows[r]
        p = prow[c]
        if p != 1:
            inv = 1 / p
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
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


def matmul(a_rows, b_rows, zero):
    """Dense product A*B, skipping zero entries of A (both are often sparse)."""
    if not a_rows:
        return []
    n = len(a_rows)
    k = len(b_rows)
    m = len(b_rows[0]) if k else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        arow = a_rows[i]
        orow = out[i]
        for t in range(k):
            ait = arow[t]
            if not ait:
                continue
            brow = b_rows[t]
            for j in range(m):
                btj = brow[j]
                if btj:
                    orow[j] = orow[j] + ait * btj
    return out


def kernel_from_rref(rows, pivots, ncols, zero, one):
    """Null-space basis from a reduced row echelon form."""
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            e = rows[r][f]
            if e:
                v[p] = -e
        basis.append(v)
    return basis
