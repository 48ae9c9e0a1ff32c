"""Exact dense linear algebra over Fraction and QuadScalar entries.

Everything here is tolerance-free: a pivot is any exactly nonzero entry.
Determinants of rational matrices go through integer Bareiss elimination
(fraction-free) after clearing denominators; rank and solving use exact
field elimination, which QuadScalar division supports directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class InconsistentSolve(ValueError):
    """Right-hand side outside the column span."""


class AmbiguousSolve(ValueError):
    """Rank-deficient system: the solution is not unique."""


def _eliminate(rows):
    """In-place forward elimination; returns pivot column list."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        for i in range(r + 1, n_rows):
            if rows[i][c]:
                factor = rows[i][c] / inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def exact_rank(matrix) -> int:
    """Rank of a matrix given as a list of rows of exact field elements."""
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    return len(_eliminate(rows))


def solve_exact(matrix, rhs):
    """Solve A x = b exactly; A given by rows.

    Raises InconsistentSolve when b is outside the span and AmbiguousSolve
    when the solution is not unique (free columns meeting the support).
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    if n_cols == 0:
        if any(v for v in rhs):
            raise InconsistentSolve("nonzero target with no basis vectors")
        return []
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = _eliminate(aug)
    rank = len(pivots)
    if n_cols in pivots:
        raise InconsistentSolve("target outside the span")
    if rank < n_cols:
        raise AmbiguousSolve(f"rank {rank} < {n_cols} unknowns")
    # back substitution; pivots are exactly the first n_cols columns
    zero = aug[0][0] - aug[0][0]
    solution = [zero] * n_cols
    for r in range(rank - 1, -1, -1):
        c = pivots[r]
        acc = aug[r][n_cols]
        for c2 in range(c + 1, n_cols):
            acc = acc - aug[r][c2] * solution[c2]
        solution[c] = acc / aug[r][c]
    return solution


def det_bareiss_int(matrix) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_rational(matrix) -> Fraction:
    """Exact determinant of a Fraction matrix via denominator-cleared Bareiss."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scaled = []
    denom = Fraction(1)
    for row in matrix:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        denom *= m
        scaled.append([int(x * m) for x in row])
    return Fraction(det_bareiss_int(scaled), 1) / denom
