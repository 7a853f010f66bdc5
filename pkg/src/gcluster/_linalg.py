"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are anything ``Fraction`` accepts.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``; ``inner``/``cols`` disambiguate empty operands."""
    if inner is None:
        inner = len(b)
    if cols is None:
        cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k in range(inner):
            x = row[k]
            if x == 0:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    out[i][j] += x * bk[j]
    return out


def row_echelon(m: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of a copy of ``m`` and its pivot columns."""
    a = [list(row) for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(m: Matrix, ncols: int) -> int:
    return len(row_echelon(m, ncols)[1])


def nullspace(m: Matrix, ncols: int) -> Matrix:
    """Basis of {x : m x = 0}, returned as an ``ncols x k`` matrix (columns)."""
    rref, pivots = row_echelon(m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(rref, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return [[] for _ in range(ncols)]
    return transpose(basis)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(n))]
    rref, pivots = row_echelon(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rref]


def determinant(m: Matrix) -> Fraction:
    a = [list(row) for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det
