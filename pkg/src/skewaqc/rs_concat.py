"""Extended Reed-Solomon codes over GF(4^m) and their GF(4) images.

A nested pair A (repetition) inside B (extended RS) over GF(q), q = 4^m,
is expanded coordinate-wise over a GF(4)-basis of GF(q).  The image D of B
contains the [mq, 1, mq] repetition code C, and the pair (C, D) fed
through S gives [[2mq, mk - 1, >= 2(q - k + 1) / 2]]_4 codes.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from skewaqc import linalg
from skewaqc.aqc import AqcParams, derive_via_s
from skewaqc.codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    LinearCodeF4,
    is_subcode,
    min_distance,
    repetition_code,
)
from skewaqc.gf4 import F4Vector, ExtField, ext_field


class NestingError(AssertionError):
    """A containment that holds mathematically failed to check out."""


@dataclass(frozen=True)
class ExtRsCode:
    """The [q, k, q - k + 1] extended RS code, the nullspace of ``parity``."""

    field: ExtField
    k: int
    parity: tuple[tuple[int, ...], ...]
    generator: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def length(self) -> int:
        return self.field.q

    @property
    def designed_distance(self) -> int:
        return self.q - self.k + 1

    def contains(self, v: Sequence[int]) -> bool:
        f = self.field
        for row in self.parity:
            acc = 0
            for a, b in zip(row, v):
                acc ^= f.mul(a, b)
            if acc:
                return False
        return True

    def codewords(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        """Every codeword as a (q^k, q) array of field elements."""
        if self.q**self.k > budget:
            raise BudgetExceeded(f"{self.q}^{self.k} codewords exceed budget {budget}")
        table = _mul_table(self.field)
        words = np.zeros((1, self.q), dtype=np.int64)
        for row in self.generator:
            r = np.asarray(row, dtype=np.int64)
            words = np.concatenate([words ^ table[c][r] for c in range(self.q)])
        return words

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        words = self.codewords(budget)
        wts = np.count_nonzero(words, axis=1)
        return int(wts[wts > 0].min())


@functools.lru_cache(maxsize=None)
def _mul_table(f: ExtField) -> np.ndarray:
    return np.array([[f.mul(a, b) for b in range(f.q)] for a in range(f.q)], dtype=np.int64)


def rs_parity_matrix(f: ExtField, k: int) -> list[list[int]]:
    """All-ones row, then rows alpha_i^j (j = 1..q-k-1) with a final 0."""
    q = f.q
    if q - k == 0:
        return []
    alphas = f.nonzero_elements()
    rows = [[1] * q]
    for j in range(1, q - k):
        rows.append([f.pow(a, j) for a in alphas] + [0])
    return rows


def extended_rs(m: int, k: int) -> ExtRsCode:
    f = ext_field(m)
    if not 1 <= k <= f.q:
        raise ValueError(f"k must lie in 1..{f.q}, got {k}")
    h = rs_parity_matrix(f, k)
    gen = linalg.nullspace(h, f.q, f.mul, f.inv)
    if len(gen) != k:  # pragma: no cover - H has full rank
        raise AssertionError(f"nullspace has dimension {len(gen)}, expected {k}")
    return ExtRsCode(f, k, tuple(map(tuple, h)), tuple(map(tuple, gen)))


def evaluation_generator(f: ExtField, k: int) -> list[list[int]]:
    """Rows (alpha_1^t, ..., alpha_{q-1}^t, [t == 0]) for t < k.

    An independent description of the same code: polynomials of degree < k
    evaluated at the nonzero elements, extended by the constant term.
    """
    alphas = f.nonzero_elements()
    return [[f.pow(a, t) for a in alphas] + [1 if t == 0 else 0] for t in range(k)]


def power_sum(f: ExtField, j: int) -> int:
    acc = 0
    for a in f.nonzero_elements():
        acc ^= f.pow(a, j)
    return acc


# ----------------------------------------------------------------------------
# basis expansion


def default_basis(f: ExtField) -> tuple[int, ...]:
    """1, g, g^2, ..., g^(m-1) for the field's fixed generator g."""
    return tuple(f.pow(f.generator, j) for j in range(f.m))


@functools.lru_cache(maxsize=None)
def _coordinate_table(f: ExtField, basis: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
    if len(basis) != f.m:
        raise ValueError(f"basis needs {f.m} elements, got {len(basis)}")
    table: dict[int, tuple[int, ...]] = {}
    for coeffs in itertools.product(range(4), repeat=f.m):
        x = 0
        for c, b in zip(coeffs, basis):
            x ^= f.scalar_mul(c, b)
        if x in table:
            raise ValueError(f"{basis} is not a GF(4)-basis of GF({f.q})")
        table[x] = coeffs
    return table


def phi(x: int, f: ExtField, basis: Sequence[int] | None = None) -> F4Vector:
    """Coordinates (a_1..a_m) of x = sum a_j beta_j."""
    basis = default_basis(f) if basis is None else tuple(basis)
    return _coordinate_table(f, basis)[x]


def phi_star(v: Sequence[int], f: ExtField, basis: Sequence[int] | None = None) -> F4Vector:
    basis = default_basis(f) if basis is None else tuple(basis)
    table = _coordinate_table(f, basis)
    out: list[int] = []
    for x in v:
        out.extend(table[x])
    return tuple(out)


def expand_code(
    rows: Sequence[Sequence[int]], f: ExtField, basis: Sequence[int] | None = None
) -> LinearCodeF4:
    """phi*(span) as a GF(4)-linear code: images of beta_j * row."""
    basis = default_basis(f) if basis is None else tuple(basis)
    out = []
    for row in rows:
        for b in basis:
            out.append(phi_star([f.mul(b, x) for x in row], f, basis))
    return LinearCodeF4(f.m * len(rows[0]) if rows else 0, out)


@dataclass(frozen=True)
class ConcatPair:
    """Nested GF(4) codes C (repetition) inside D = phi*(extended RS)."""

    field: ExtField
    basis: tuple[int, ...]
    rs: ExtRsCode
    c_prime: LinearCodeF4  # phi*(A), the [mq, m, q] code
    c: LinearCodeF4  # the [mq, 1, mq] repetition code
    d: LinearCodeF4
    exact_distance: int | None = None

    @property
    def designed_distance(self) -> int:
        return self.rs.designed_distance


def concat_pair(
    m: int,
    k: int,
    basis: Sequence[int] | None = None,
    *,
    verify_budget: int = 2**12,
) -> ConcatPair:
    """Build (C, D) and check C inside phi*(A) inside D.

    When D has at most ``verify_budget`` codewords its minimum distance is
    computed and must reach the designed q - k + 1.
    """
    rs = extended_rs(m, k)
    f = rs.field
    basis = default_basis(f) if basis is None else tuple(basis)
    q = f.q
    ones = [1] * q
    if not rs.contains(ones):
        raise NestingError("repetition code A is not inside the extended RS code B")
    c_prime = expand_code([ones], f, basis)
    block_identity = [
        tuple(1 if pos % m == j else 0 for pos in range(m * q)) for j in range(m)
    ]
    if c_prime != LinearCodeF4(m * q, block_identity):
        raise NestingError("phi*(A) does not have the block-identity generator")
    d = expand_code(rs.generator, f, basis)
    c = repetition_code(m * q)
    if not (is_subcode(c, c_prime) and is_subcode(c_prime, d)):
        raise NestingError("C inside phi*(A) inside D failed")
    exact = None
    if d.size <= verify_budget:
        exact = min_distance(d, verify_budget)
        if exact < rs.designed_distance:
            raise NestingError(f"d(D) = {exact} is below the designed {rs.designed_distance}")
    return ConcatPair(f, basis, rs, c_prime, c, d, exact)


def concatenated_rs_params(m: int, k: int, basis: Sequence[int] | None = None) -> AqcParams:
    """[[2mq, mk - 1, >= 2(q - k + 1) / 2]]_4 via S on the concatenated pair.

    dz is always the designed floor 2(q - k + 1) and flagged as a bound; the
    enumerated d(D), when available, is on ``concat_pair(m, k).exact_distance``.
    """
    pair = concat_pair(m, k, basis)
    return derive_via_s(pair.c, pair.d, d_outer=pair.designed_distance)


theorem_7_3_params = concatenated_rs_params  # public alias


@dataclass(frozen=True)
class TableRow:
    k: int
    k_prime: int
    dz_floor: int
    params: AqcParams
    d_outer_exact: int | None = None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "k_prime": self.k_prime,
            "dz_floor": self.dz_floor,
            "d_outer_exact": self.d_outer_exact,
            "params": self.params.to_json(),
        }


def reproduce_table(m: int) -> list[TableRow]:
    """One row per k = 1..q, in order."""
    if m not in (1, 2, 3):
        raise ValueError(f"m must be 1, 2 or 3, got {m}")
    rows = []
    for k in range(1, 4**m + 1):
        pair = concat_pair(m, k)
        p = derive_via_s(pair.c, pair.d, d_outer=pair.designed_distance)
        rows.append(TableRow(k, int(p.k), p.dz, p, pair.exact_distance))
    return rows


def format_table(rows: Sequence[TableRow], per_line: int = 8) -> str:
    """Aligned columns of k, k' and the dz floor, ``per_line`` codes per band."""
    out = []
    for start in range(0, len(rows), per_line):
        band = rows[start : start + per_line]
        cells = [
            ("k", [r.k for r in band]),
            ("k'", [r.k_prime for r in band]),
            ("dz >=", [r.dz_floor for r in band]),
        ]
        width = max(len(str(v)) for _, vals in cells for v in vals)
        for label, vals in cells:
            out.append(f"{label:<6}" + " ".join(f"{v:>{width}}" for v in vals))
        out.append("")
    return "\n".join(out).rstrip() + "\n"
