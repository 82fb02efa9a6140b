"""Linear and additive codes over GF(4).

Additive codes are stored canonically: every GF(4) coordinate is expanded
into its two GF(2) coordinates over {1, w} and the generators are kept in
reduced row echelon form over GF(2).  Two codes are equal exactly when
their canonical bases are equal.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from skewaqc import gf2, gf4, linalg
from skewaqc.gf4 import F4Vector
from skewaqc.perm import IndexPermutation

DEFAULT_BUDGET = 2**24

_LOW_BLOCK_BITS = 16
_M5 = np.uint64(0x5555555555555555)
_MASK64 = (1 << 64) - 1


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more codewords than allowed."""


class AdditiveCodeF4:
    """A GF(2)-linear subset of GF(4)^n.

    Parameters
    ----------
    n : int
        Code length.
    generators : iterable of vectors
        Rows over GF(4); they need not be independent, the span is kept.
    """

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = ()) -> None:
        packed = []
        for g in generators:
            if len(g) != n:
                raise ValueError(f"generator {tuple(g)} has length {len(g)}, expected {n}")
            packed.append(gf2.pack(g))
        self._init(n, gf2.Echelon(packed))

    def _init(self, n: int, ech: gf2.Echelon) -> None:
        self.n = n
        self._ech = ech
        self.basis: tuple[int, ...] = ech.basis()

    @classmethod
    def from_packed(cls, n: int, rows: Iterable[int]) -> AdditiveCodeF4:
        code = cls.__new__(cls)
        code._init(n, gf2.Echelon(rows))
        return code

    @classmethod
    def zero(cls, n: int) -> AdditiveCodeF4:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> AdditiveCodeF4:
        return cls.from_packed(n, (1 << b for b in range(2 * n)))

    @property
    def kappa(self) -> int:
        """GF(2)-dimension; the code has 2**kappa words."""
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.kappa

    @property
    def generators(self) -> tuple[F4Vector, ...]:
        return tuple(gf2.unpack(x, self.n) for x in self.basis)

    def contains_packed(self, x: int) -> bool:
        return self._ech.contains(x)

    def __contains__(self, v: Sequence[int]) -> bool:
        return len(v) == self.n and self._ech.contains(gf2.pack(v))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearCodeF4):
            other = other.additive
        if not isinstance(other, AdditiveCodeF4):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def is_linear(self) -> bool:
        """Closed under multiplication by w, i.e. GF(4)-linear."""
        return all(self._ech.contains(gf2.times_w(x, self.n)) for x in self.basis)

    def __repr__(self) -> str:
        return f"AdditiveCodeF4(n={self.n}, size=2^{self.kappa})"


class LinearCodeF4:
    """A GF(4)-linear [n, k] code given by k independent generator rows."""

    def __init__(self, n: int, generators: Iterable[Sequence[int]]) -> None:
        rows = [tuple(g) for g in generators]
        for g in rows:
            if len(g) != n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
            if any(a not in (0, 1, 2, 3) for a in g):
                raise ValueError(f"generator {g} has entries outside GF(4)")
        packed = [gf2.pack(g) for g in rows]
        ech = gf2.Echelon()
        for x in packed:
            # independent over GF(4) iff {g, w g} add 2 to the GF(2) rank
            if not (ech.add(x) and ech.add(gf2.times_w(x, n))):
                raise ValueError("generator rows are dependent over GF(4)")
        self.n = n
        self.rows: tuple[F4Vector, ...] = tuple(rows)
        self._additive = AdditiveCodeF4.__new__(AdditiveCodeF4)
        self._additive._init(n, ech)

    @classmethod
    def spanned_by(cls, n: int, vectors: Iterable[Sequence[int]]) -> LinearCodeF4:
        """GF(4)-span of arbitrary vectors (dependent ones are dropped)."""
        return cls(n, _gf4_basis(n, vectors))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def kappa(self) -> int:
        return 2 * self.k

    @property
    def size(self) -> int:
        return 4**self.k

    @property
    def generators(self) -> tuple[F4Vector, ...]:
        return self.rows

    @property
    def additive(self) -> AdditiveCodeF4:
        """The same set viewed as an additive code."""
        return self._additive

    def __contains__(self, v: Sequence[int]) -> bool:
        return v in self._additive

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LinearCodeF4, AdditiveCodeF4)):
            return self._additive == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._additive)

    def __repr__(self) -> str:
        return f"LinearCodeF4([{self.n},{self.k}])"


Code = Union[AdditiveCodeF4, LinearCodeF4]


def as_additive(code: Code) -> AdditiveCodeF4:
    return code.additive if isinstance(code, LinearCodeF4) else code


def _gf4_basis(n: int, vectors: Iterable[Sequence[int]]) -> list[F4Vector]:
    ech = gf2.Echelon()
    out = []
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise ValueError(f"vector {v} has length {len(v)}, expected {n}")
        x = gf2.pack(v)
        if ech.add(x):
            ech.add(gf2.times_w(x, n))
            out.append(v)
    return out


def to_linear(code: Code) -> LinearCodeF4:
    """View a GF(4)-linear additive code as a LinearCodeF4."""
    if isinstance(code, LinearCodeF4):
        return code
    if not code.is_linear():
        raise ValueError("code is not GF(4)-linear")
    return LinearCodeF4.spanned_by(code.n, code.generators)


def repetition_code(n: int) -> LinearCodeF4:
    return LinearCodeF4(n, [(1,) * n])


# ----------------------------------------------------------------------------
# enumeration


def _check_budget(code: AdditiveCodeF4, budget: int) -> None:
    if code.size > budget:
        raise BudgetExceeded(f"code has 2^{code.kappa} words, budget is {budget}")


def enumerate_codewords(code: Code, budget: int = DEFAULT_BUDGET) -> Iterator[F4Vector]:
    """Every codeword once, zero vector first (binary reflected Gray order)."""
    add = as_additive(code)
    _check_budget(add, budget)
    return _gray_walk(add)


def _gray_walk(add: AdditiveCodeF4) -> Iterator[F4Vector]:
    n, basis = add.n, add.basis
    x = 0
    yield gf2.unpack(0, n)
    for t in range(1, add.size):
        x ^= basis[(t & -t).bit_length() - 1]
        yield gf2.unpack(x, n)


def _to_words(x: int, nwords: int) -> np.ndarray:
    return np.array([(x >> (64 * w)) & _MASK64 for w in range(nwords)], dtype=np.uint64)


def _codeword_blocks(code: AdditiveCodeF4) -> Iterator[np.ndarray]:
    """Yield arrays of shape (B, words) that together hold every codeword."""
    nwords = max(1, (2 * code.n + 63) // 64)
    gens = [_to_words(x, nwords) for x in code.basis]
    low, high = gens[:_LOW_BLOCK_BITS], gens[_LOW_BLOCK_BITS:]
    block = np.zeros((1, nwords), dtype=np.uint64)
    for g in low:
        block = np.concatenate([block, block ^ g])
    yield block
    offset = np.zeros(nwords, dtype=np.uint64)
    for t in range(1, 1 << len(high)):
        offset = offset ^ high[(t & -t).bit_length() - 1]
        yield block ^ offset


def _block_weights(block: np.ndarray) -> np.ndarray:
    wts = np.zeros(block.shape[0], dtype=np.int64)
    for w in range(block.shape[1]):
        x = block[:, w]
        wts += np.bitwise_count((x | (x >> np.uint64(1))) & _M5)
    return wts


def weight_distribution(code: Code, budget: int = DEFAULT_BUDGET) -> list[int]:
    add = as_additive(code)
    _check_budget(add, budget)
    counts = np.zeros(add.n + 1, dtype=np.int64)
    for block in _codeword_blocks(add):
        counts += np.bincount(_block_weights(block), minlength=add.n + 1)
    return [int(c) for c in counts]


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of sum A_i X^(n-i) Y^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs or self.coeffs[0] < 1 or any(c < 0 for c in self.coeffs):
            raise ValueError(f"not a weight enumerator: {self.coeffs}")

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    @property
    def min_distance(self) -> int | None:
        return next((i for i, a in enumerate(self.coeffs) if i and a), None)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.n else 0

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> WeightEnumerator:
        return cls(tuple(data))

    def __str__(self) -> str:
        n = self.n
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("X", n - i), ("Y", i)) if e
            )
            terms.append(f"{a}*{mono}" if mono and a != 1 else (mono or str(a)))
        return " + ".join(terms)


def weight_enumerator(code: Code, budget: int = DEFAULT_BUDGET) -> WeightEnumerator:
    return WeightEnumerator(tuple(weight_distribution(code, budget)))


def _low_weight_search(code: AdditiveCodeF4, budget: int) -> int:
    """Smallest weight of a nonzero codeword, by syndrome search over
    vectors of increasing weight.  Cost ~ sum_w C(n, w) 3^w."""
    n = code.n
    checks = trace_dual(code).basis
    # syndrome of c * e_i for c in {1, w, w^2}
    synd = []
    for i in range(n):
        s1 = _syndrome(1 << (2 * i), checks, n)
        sw = _syndrome(2 << (2 * i), checks, n)
        synd.append((s1, sw, s1 ^ sw))
    spent = 0
    for w in range(1, n + 1):
        spent += math.comb(n, w) * 3**w
        if spent > budget:
            raise BudgetExceeded(
                f"minimum distance search passed weight {w - 1} without a codeword; "
                f"budget {budget} exhausted"
            )
        for support in itertools.combinations(range(n), w):
            for pick in itertools.product(*(synd[i] for i in support)):
                s = 0
                for x in pick:
                    s ^= x
                if s == 0:
                    return w
    raise AssertionError("nonzero code without nonzero codeword")  # pragma: no cover


def _syndrome(x: int, checks: Sequence[int], n: int) -> int:
    s = 0
    sx = gf2.swap_pairs(x, n)
    for j, h in enumerate(checks):
        if (sx & h).bit_count() & 1:
            s |= 1 << j
    return s


def min_distance(code: Code, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight of a nonzero codeword.

    Small codes are enumerated outright; larger ones fall back to a search
    over low-weight vectors using the trace dual as parity checks.  Either
    route raises BudgetExceeded past ``budget`` candidates.
    """
    add = as_additive(code)
    if add.kappa == 0:
        raise ValueError("the zero code has no minimum distance")
    if add.size <= budget:
        best = add.n
        for block in _codeword_blocks(add):
            wts = _block_weights(block)
            nz = wts[wts > 0]
            if nz.size:
                best = min(best, int(nz.min()))
        return best
    return _low_weight_search(add, budget)


# ----------------------------------------------------------------------------
# duality and containment


def trace_dual(code: Code) -> AdditiveCodeF4:
    """Dual under the trace-Hermitian form, via a GF(2) nullspace."""
    add = as_additive(code)
    n = add.n
    system = [gf2.swap_pairs(x, n) for x in add.basis]
    return AdditiveCodeF4.from_packed(n, gf2.nullspace(system, 2 * n))


def hermitian_dual(code: LinearCodeF4) -> LinearCodeF4:
    """Dual under the Hermitian form, via a GF(4) nullspace of conj(G)."""
    if not isinstance(code, LinearCodeF4):
        code = to_linear(code)
    conj_rows = [[gf4.conjugate(a) for a in g] for g in code.rows]
    basis = linalg.nullspace(conj_rows, code.n, gf4.f4_mul, gf4.f4_inv)
    return LinearCodeF4(code.n, [tuple(b) for b in basis])


def is_subcode(a: Code, b: Code) -> bool:
    a, b = as_additive(a), as_additive(b)
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    return all(b.contains_packed(x) for x in a.basis)


def dual_distance_at_least_two(code: Code) -> bool:
    """True iff the trace dual is nonzero and has no word of weight 1.

    A weight-1 vector c e_i is orthogonal to the code iff the projection of
    the code on coordinate i is a proper subgroup of GF(4), i.e. the two bit
    columns of coordinate i have GF(2) rank below 2.
    """
    add = as_additive(code)
    if add.kappa >= 2 * add.n:
        return False
    for i in range(add.n):
        cols = {(x >> (2 * i)) & 3 for x in add.basis}
        if gf2.rank(cols) < 2:
            return False
    return True


# ----------------------------------------------------------------------------
# coordinate permutations and shifts


def permute_packed(x: int, p: IndexPermutation, n: int) -> int:
    out = 0
    for j, src in enumerate(p.image):
        out |= ((x >> (2 * (src - 1))) & 3) << (2 * j)
    return out


def permute_code(code: Code, p: IndexPermutation) -> AdditiveCodeF4:
    add = as_additive(code)
    if len(p) != add.n:
        raise ValueError(f"permutation on {len(p)} positions, code length {add.n}")
    return AdditiveCodeF4.from_packed(add.n, (permute_packed(x, p, add.n) for x in add.basis))


def is_invariant_under(code: Code, p: IndexPermutation) -> bool:
    add = as_additive(code)
    if len(p) != add.n:
        raise ValueError(f"permutation on {len(p)} positions, code length {add.n}")
    return all(add.contains_packed(permute_packed(x, p, add.n)) for x in add.basis)


def shift_packed(x: int, n: int, by: int = 1) -> int:
    """Cyclic shift (v_{n-by}, ..., v_{n-1}, v_0, ...) of a packed vector."""
    by %= n
    full = (1 << (2 * n)) - 1
    return ((x << (2 * by)) | (x >> (2 * (n - by)))) & full


def cyclic_shift(v: Sequence[int], by: int = 1) -> F4Vector:
    by %= len(v)
    return tuple(v[len(v) - by :]) + tuple(v[: len(v) - by])


class ShiftInvariance(NamedTuple):
    kind: str  # "cyclic", "quasi-cyclic" or "none"
    index: int | None


def shift_invariance_kind(code: Code) -> ShiftInvariance:
    """Smallest divisor l < n of n whose l-fold shift preserves the code.

    Length 1 counts as cyclic: the shift is the identity there.
    """
    add = as_additive(code)
    n = add.n
    for l in range(1, max(n, 2)):
        if n % l:
            continue
        if all(add.contains_packed(shift_packed(x, n, l)) for x in add.basis):
            return ShiftInvariance("cyclic" if l == 1 else "quasi-cyclic", l)
    return ShiftInvariance("none", None)
