"""Small exact linear algebra over the rationals (row reduction, rank, kernels)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(rows: Sequence[Sequence]) -> Matrix:
    return rref(rows)[0]


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Greedy indices of a maximal linearly independent subset, in input order."""
    chosen: list[int] = []
    basis: Matrix = []
    for i, r in enumerate(rows):
        trial = basis + [list(r)]
        if rank(trial) > len(basis):
            basis = rref(trial)[0]
            chosen.append(i)
    return chosen


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square nonsingular system ``a x = b``."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red]
