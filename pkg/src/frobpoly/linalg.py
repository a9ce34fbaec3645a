"""Exact Gaussian elimination over any field whose elements support + - * /.

Pivots are the first nonzero entry in row-major order; with exact
arithmetic the choice does not affect correctness.
"""

from __future__ import annotations


def _echelon(rows, ncols):
    """Row-reduce in place to reduced echelon form; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(matrix, rhs, zero):
    """One solution x of matrix @ x == rhs, free variables set to zero.

    Returns None when the system is inconsistent.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = _echelon(rows, ncols)
    for row in rows[len(pivots):]:
        if row[ncols]:
            return None
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def rank_profile(rows, zero):
    """Indices of a maximal linearly independent subset of rows, greedy in order."""
    basis = []
    reduced = []  # (pivot column, normalized row)
    for idx, row in enumerate(rows):
        v = list(row)
        for c, b in reduced:
            if v[c]:
                f = v[c]
                v = [x - f * y if y else x for x, y in zip(v, b)]
        c = next((j for j, x in enumerate(v) if x), None)
        if c is None:
            continue
        inv = v[c].inverse()
        v = [x * inv if x else x for x in v]
        # keep earlier rows reduced at the new pivot
        reduced = [(c0, [x - b[c] * y if y else x for x, y in zip(b, v)] if b[c] else b)
                   for c0, b in reduced]
        reduced.append((c, v))
        basis.append(idx)
    return basis


def kernel_basis(matrix, ncols, zero, one):
    """Basis of the right null space of ``matrix`` (list of vectors)."""
    rows = [list(r) for r in matrix]
    pivots = _echelon(rows, ncols) if rows else []
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        out.append(v)
    return out
