"""Small exact linear algebra helpers over the rationals.

Matrices are lists of row lists of ``Fraction``; vectors are tuples.
Everything is dense and tiny: diagrams at desk scale give spaces of
dimension a few dozen at most.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def rref(M):
    """Reduced row echelon form and pivot columns (copy, input untouched)."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        scale = A[r][c]
        A[r] = [x / scale for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                factor = A[i][c]
                A[i] = [x - factor * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def solve_columns(basis, vec):
    """Coefficients expressing ``vec`` in the given column vectors, or None."""
    return _solve_cached(tuple(tuple(v) for v in basis), tuple(vec))


@lru_cache(maxsize=1 << 18)
def _solve_cached(basis, vec):
    if not basis:
        return None if any(x != 0 for x in vec) else ()
    n = len(basis[0])
    aug = [[basis[j][i] for j in range(len(basis))] + [vec[i]] for i in range(n)]
    A, pivots = rref(aug)
    if len(basis) in pivots:
        return None
    coords = [Fraction(0)] * len(basis)
    for r, c in enumerate(pivots):
        coords[c] = A[r][-1]
    return tuple(coords)


def subspace_leq(sub, sup) -> bool:
    """True iff span(sub) is contained in span(sup), columns as vectors."""
    return all(solve_columns(sup, v) is not None for v in sub)


def product_is_zero(A, B) -> bool:
    """True iff the matrix product A @ B vanishes, exploiting sparsity."""
    if not A or not B:
        return True
    a_cols = {}
    for r, row in enumerate(A):
        for k, v in enumerate(row):
            if v:
                a_cols.setdefault(k, []).append((r, v))
    for c in range(len(B[0])):
        acc = {}
        for k in range(len(B)):
            b = B[k][c]
            if not b or k not in a_cols:
                continue
            for r, v in a_cols[k]:
                acc[r] = acc.get(r, 0) + v * b
        if any(x != 0 for x in acc.values()):
            return False
    return True


def independent_columns(vectors):
    """A maximal independent subfamily, keeping the original order."""
    kept = []
    for v in vectors:
        if solve_columns(kept, v) is None:
            kept.append(tuple(Fraction(x) for x in v))
    return tuple(kept)
