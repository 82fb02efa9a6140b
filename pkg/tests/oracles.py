"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here touches the packed-integer representation or row reduction:
codes are plain Python sets of tuples built by closure.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

# GF(4) with 0, 1, w, w^2 = 0, 1, 2, 3 and w^2 = w + 1, written out by hand
ADD = [[a ^ b for b in range(4)] for a in range(4)]
MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]
CONJ = [0, 1, 3, 2]


def vadd(u, v):
    return tuple(ADD[a][b] for a, b in zip(u, v))


def vscale(c, v):
    return tuple(MUL[c][a] for a in v)


def wt(v) -> int:
    return sum(1 for a in v if a)


def additive_span(n: int, rows: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    words = {(0,) * n}
    for r in rows:
        r = tuple(r)
        words |= {vadd(w, r) for w in words}
    return words


def linear_span(n: int, rows: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    return additive_span(n, [vscale(c, r) for r in rows for c in (1, 2)])


def all_vectors(n: int):
    return itertools.product(range(4), repeat=n)


def tr_inner(u, v) -> int:
    """sum(u_i conj(v_i) + conj(u_i) v_i), which lies in GF(2)."""
    acc = 0
    for a, b in zip(u, v):
        acc ^= MUL[a][CONJ[b]] ^ MUL[CONJ[a]][b]
    assert acc in (0, 1)
    return acc


def herm_inner(u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc ^= MUL[a][CONJ[b]]
    return acc


def trace_dual_set(n: int, words: set) -> set:
    return {v for v in all_vectors(n) if all(tr_inner(v, c) == 0 for c in words)}


def hermitian_dual_set(n: int, words: set) -> set:
    return {v for v in all_vectors(n) if all(herm_inner(v, c) == 0 for c in words)}


def weight_counts(n: int, words: Iterable) -> list[int]:
    out = [0] * (n + 1)
    for w in words:
        out[wt(w)] += 1
    return out


def min_wt(words) -> int:
    return min(wt(w) for w in words if any(w))


def s_map(v):
    out = []
    for a in v:
        out += [a, CONJ[a]]
    return tuple(out)
