"""Dense Gaussian elimination over characteristic-2 fields.

Both GF(4) and GF(4^m) encode elements as integers with XOR addition, so
one routine parametrised by ``mul``/``inv`` serves both.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

Mul = Callable[[int, int], int]
Inv = Callable[[int], int]


def rref(rows: Sequence[Sequence[int]], mul: Mul, inv: Inv) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        s = inv(m[r][c])
        m[r] = [mul(s, x) for x in m[r]]
        piv = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x ^ mul(f, y) for x, y in zip(m[i], piv)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def matrix_rank(rows: Sequence[Sequence[int]], mul: Mul, inv: Inv) -> int:
    return len(rref(rows, mul, inv)[0])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, mul: Mul, inv: Inv) -> list[list[int]]:
    """Basis of {x : sum_j row[j] * x[j] = 0 for every row}."""
    red, pivots = rref(rows, mul, inv)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [0] * ncols
        x[f] = 1
        # characteristic 2: x_p = -r[f] = r[f]
        for r, p in zip(red, pivots):
            x[p] = r[f]
        basis.append(x)
    return basis
