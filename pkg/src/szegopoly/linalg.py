"""Exact linear algebra over the Gaussian rationals.

Dense Gaussian elimination with every entry kept as an exact
GaussianRational.  Pivots are chosen by symbolic magnitude (total bit size
of numerators and denominators), which keeps intermediate coefficients from
blowing up; ties break on row order, so elimination is deterministic.  Two
pivot strategies are exposed so that independent solves of the same system
can cross-check each other.

Zero multipliers are skipped, so block-structured systems (such as the
Fischer matrices, which are block triangular in the graded basis) cost
little more than their diagonal blocks.
"""

from __future__ import annotations

from typing import Sequence

from .rational import GaussianRational, ZERO, ONE


class InternalCheckError(RuntimeError):
    """A condition that the underlying theory guarantees cannot happen."""


Matrix = Sequence[Sequence[GaussianRational]]


def _pick_pivot(rows, col, start, strategy):
    candidates = [
        (rows[i][col].bit_size(), i)
        for i in range(start, len(rows))
        if rows[i][col]
    ]
    if not candidates:
        return None
    if strategy == "small":
        return min(candidates)[1]
    if strategy == "large":
        return max(candidates)[1]
    raise ValueError(f"unknown pivot strategy {strategy!r}")


def solve_exact(
    matrix: Matrix,
    rhs: Sequence[GaussianRational],
    *,
    pivot: str = "small",
) -> list[GaussianRational] | None:
    """Solve matrix @ x = rhs exactly.

    Returns one solution (free variables set to zero) or None when the
    system is inconsistent.  The matrix may be rectangular; rows and rhs
    must have matching lengths.
    """
    m = len(matrix)
    if m != len(rhs):
        raise ValueError(f"{m} rows but {len(rhs)} right-hand sides")
    if m == 0:
        return []
    n = len(matrix[0])
    work = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for row in work:
        if len(row) != n + 1:
            raise ValueError("ragged matrix")

    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(n):
        if r == m:
            break
        i = _pick_pivot(work, c, r, pivot)
        if i is None:
            continue
        work[r], work[i] = work[i], work[r]
        piv_row = work[r]
        piv = piv_row[c]
        for k in range(r + 1, m):
            f = work[k][c]
            if not f:
                continue
            f = f / piv
            row_k = work[k]
            row_k[c] = ZERO
            for j in range(c + 1, n + 1):
                v = piv_row[j]
                if v:
                    row_k[j] = row_k[j] - f * v
        pivots.append((r, c))
        r += 1

    for k in range(r, m):
        if work[k][n]:
            return None  # 0 = nonzero: inconsistent

    x: list[GaussianRational] = [ZERO] * n
    for row_i, col_i in reversed(pivots):
        row = work[row_i]
        acc = row[n]
        for j in range(col_i + 1, n):
            if row[j] and x[j]:
                acc = acc - row[j] * x[j]
        x[col_i] = acc / row[col_i]
    return x


def det_exact(matrix: Matrix) -> GaussianRational:
    """Exact determinant of a square matrix of GaussianRationals."""
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ValueError("determinant requires a square matrix")
    if m == 0:
        return ONE
    work = [list(row) for row in matrix]
    det = ONE
    for c in range(m):
        i = _pick_pivot(work, c, c, "small")
        if i is None:
            return ZERO
        if i != c:
            work[c], work[i] = work[i], work[c]
            det = -det
        piv_row = work[c]
        piv = piv_row[c]
        det = det * piv
        for k in range(c + 1, m):
            f = work[k][c]
            if not f:
                continue
            f = f / piv
            row_k = work[k]
            for j in range(c + 1, m):
                v = piv_row[j]
                if v:
                    row_k[j] = row_k[j] - f * v
    return det
