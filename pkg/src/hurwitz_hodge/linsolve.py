"""Exact Gaussian elimination over the rationals.

Built for small, possibly overdetermined systems that must hold exactly:
full column rank is mandatory and every equation (including surplus rows)
is re-checked against the solution, so a wrong right-hand side can never
pass silently.
"""

from __future__ import annotations

from fractions import Fraction


class RankDeficientError(ValueError):
    """The coefficient matrix does not have full column rank."""


class InconsistentSystemError(ValueError):
    """Some equation has a nonzero residual; carries the first offender."""

    def __init__(self, row_index: int, residual: Fraction):
        self.row_index = row_index
        self.residual = residual
        super().__init__(f"equation {row_index} has nonzero residual {residual}")


def column_rank(matrix) -> int:
    """Rank of the column space, by exact elimination on a working copy."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return 0
    n_cols = len(rows[0])
    pivots = 0
    for col in range(n_cols):
        pivot_at = next((r for r in range(pivots, len(rows)) if rows[r][col] != 0), None)
        if pivot_at is None:
            continue
        rows[pivots], rows[pivot_at] = rows[pivot_at], rows[pivots]
        pivot = rows[pivots][col]
        for r in range(pivots + 1, len(rows)):
            f = rows[r][col]
            if f:
                scale = f / pivot
                rows[r] = [a - scale * b for a, b in zip(rows[r], rows[pivots])]
        pivots += 1
    return pivots


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly; A may have more rows than columns.

    Raises RankDeficientError if the columns are dependent and
    InconsistentSystemError if any row of the original system is not
    satisfied exactly by the solution of the pivot rows.  Returns the
    solution as a list of Fractions.
    """
    rows = [list(row) for row in matrix]
    if not rows:
        raise ValueError("empty system")
    n_cols = len(rows[0])
    if any(len(row) != n_cols for row in rows):
        raise ValueError("ragged matrix")
    if len(rhs) != len(rows):
        raise ValueError("right-hand side length does not match the matrix")
    original = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    work = [row[:] for row in original]
    n_rows = len(work)
    for col in range(n_cols):
        pivot_at = next((r for r in range(col, n_rows) if work[r][col] != 0), None)
        if pivot_at is None:
            raise RankDeficientError(f"column rank below {n_cols}: no pivot for column {col}")
        work[col], work[pivot_at] = work[pivot_at], work[col]
        pivot = work[col][col]
        for r in range(col + 1, n_rows):
            f = work[r][col]
            if f:
                scale = f / pivot
                work[r] = [a - scale * b for a, b in zip(work[r], work[col])]
    solution = [Fraction(0)] * n_cols
    for col in range(n_cols - 1, -1, -1):
        row = work[col]
        s = row[-1] - sum(row[c] * solution[c] for c in range(col + 1, n_cols))
        solution[col] = s / row[col]
    for idx, row in enumerate(original):
        residual = sum(row[c] * solution[c] for c in range(n_cols)) - row[-1]
        if residual:
            raise InconsistentSystemError(idx, residual)
    return solution
