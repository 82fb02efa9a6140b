"""GF(2) linear algebra on Python integers used as bit rows.

A vector in GF(4)^n is packed into a 2n-bit integer: coordinate i occupies
bits 2i (coefficient of 1) and 2i+1 (coefficient of w).  Additive codes are
GF(2)-subspaces of these integers, so everything reduces to XOR elimination.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def low_mask(n: int) -> int:
    """Bits 0, 2, 4, ... of a 2n-bit word."""
    return int("01" * n, 2) if n else 0


def pack(v: Sequence[int]) -> int:
    x = 0
    for i, a in enumerate(v):
        x |= a << (2 * i)
    return x


def unpack(x: int, n: int) -> tuple[int, ...]:
    return tuple((x >> (2 * i)) & 3 for i in range(n))


def packed_weight(x: int, n: int) -> int:
    return ((x | (x >> 1)) & low_mask(n)).bit_count()


def swap_pairs(x: int, n: int) -> int:
    """Exchange the two bits of every coordinate."""
    lo = low_mask(n)
    return ((x & lo) << 1) | ((x >> 1) & lo)


def trace_form(x: int, y: int, n: int) -> int:
    """Trace-Hermitian product of packed vectors.

    With u = a + b w and v = c + d w the trace of u * conj(v) is ad + bc,
    a symplectic form, so the product is the parity of x & swap(y).
    """
    return (x & swap_pairs(y, n)).bit_count() & 1


def times_w(x: int, n: int) -> int:
    """Multiply every coordinate by w: (a + b w) w = b + (a + b) w."""
    lo = low_mask(n)
    a = x & lo
    b = (x >> 1) & lo
    return b | ((a ^ b) << 1)


def conj_packed(x: int, n: int) -> int:
    """Coordinate-wise conjugation: a + b w -> (a + b) + b w."""
    lo = low_mask(n)
    b = (x >> 1) & lo
    return x ^ b


class Echelon:
    """Reduced row echelon form over GF(2), keyed by pivot bit.

    Pivots are the highest set bit of each row; every row is fully reduced
    against the other pivots, so the form is canonical for the span.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self.rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, x: int) -> int:
        # each stored row carries exactly one pivot bit, so one pass suffices
        for p, r in self.rows.items():
            if (x >> p) & 1:
                x ^= r
        return x

    def add(self, x: int) -> bool:
        """Insert x; return False if it was already in the span."""
        x = self.reduce(x)
        if not x:
            return False
        top = x.bit_length() - 1
        bit = 1 << top
        for p, r in self.rows.items():
            if r & bit:
                self.rows[p] = r ^ x
        self.rows[top] = x
        return True

    def contains(self, x: int) -> bool:
        return self.reduce(x) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> tuple[int, ...]:
        """Rows sorted by decreasing pivot."""
        return tuple(self.rows[p] for p in sorted(self.rows, reverse=True))


def rank(rows: Iterable[int]) -> int:
    return Echelon(rows).rank


def nullspace(rows: Sequence[int], nbits: int) -> list[int]:
    """Basis of {x : popcount(x & r) even for every r}."""
    ech = Echelon(rows)
    pivots = set(ech.rows)
    basis = []
    for f in range(nbits):
        if f in pivots:
            continue
        x = 1 << f
        for p, r in ech.rows.items():
            if (r >> f) & 1:
                x |= 1 << p
        basis.append(x)
    return basis
