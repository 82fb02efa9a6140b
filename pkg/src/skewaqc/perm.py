"""Permutations of coordinate positions, 1-based like the [2n] convention."""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence


class IndexPermutation:
    """A bijection of {1, ..., N}.

    ``p(i)`` is the image of position i.  Acting on a vector v the
    permutation produces ``w[j] = v[p(j)]`` (see :meth:`apply`).
    Composition ``p * q`` is the map i -> p(q(i)).
    """

    __slots__ = ("_image",)

    def __init__(self, image: Sequence[int]) -> None:
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        self._image = image

    @classmethod
    def identity(cls, size: int) -> IndexPermutation:
        return cls(range(1, size + 1))

    @classmethod
    def shift(cls, size: int, by: int = 1) -> IndexPermutation:
        """Index shift i -> i + by (mod size)."""
        return cls([(i + by) % size + 1 for i in range(size)])

    @classmethod
    def from_cycles(cls, cycles: str | Iterable[Sequence[int]], size: int) -> IndexPermutation:
        """Build from cycle notation such as ``"(1,4,5,8)(2,3,6,7)"``."""
        if isinstance(cycles, str):
            groups = re.findall(r"\(([^()]*)\)", cycles)
            cycles = [[int(t) for t in g.split(",") if t.strip()] for g in groups]
        image = list(range(1, size + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen or not 1 <= a <= size:
                    raise ValueError(f"bad cycle entry {a}")
                seen.add(a)
                image[a - 1] = b
        return cls(image)

    @property
    def n_positions(self) -> int:
        return len(self._image)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    def __call__(self, i: int) -> int:
        return self._image[i - 1]

    def __len__(self) -> int:
        return len(self._image)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexPermutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self) -> int:
        return hash(self._image)

    def __mul__(self, other: IndexPermutation) -> IndexPermutation:
        if len(other) != len(self):
            raise ValueError("size mismatch")
        return IndexPermutation([self._image[j - 1] for j in other._image])

    def __pow__(self, k: int) -> IndexPermutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = IndexPermutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> IndexPermutation:
        inv = [0] * len(self._image)
        for i, j in enumerate(self._image, start=1):
            inv[j - 1] = i
        return IndexPermutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest entry."""
        seen = set()
        out = []
        for start in range(1, len(self._image) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def apply(self, v: Sequence) -> tuple:
        """Induced action on vectors: result[j] = v[p(j)]."""
        if len(v) != len(self._image):
            raise ValueError(f"length mismatch: vector {len(v)}, permutation {len(self._image)}")
        return tuple(v[i - 1] for i in self._image)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "(1)"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"IndexPermutation({str(self)!r}, size={len(self)})"


def permutation_order(p: IndexPermutation) -> int:
    return p.order()
