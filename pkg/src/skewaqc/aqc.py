"""Asymmetric quantum code parameters from nested classical additive codes.

Only parameters are derived here; no quantum states are built.  Given
additive codes with trace_dual(C1) contained in C2 there is an
[[n, k, dz/dx]]_4 code with 4^k = |C2| / |trace_dual(C1)| and
{dz, dx} = {d(C1), d(C2)}.  We always report dz >= dx.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from skewaqc import gf4
from skewaqc.codes import (
    DEFAULT_BUDGET,
    Code,
    LinearCodeF4,
    as_additive,
    dual_distance_at_least_two,
    enumerate_codewords,
    is_subcode,
    min_distance,
    trace_dual,
    weight_enumerator,
)
from skewaqc.wenum import dual_s_image_wenum

DEFAULT_SEED = 0


class PreconditionError(ValueError):
    """A construction's hypothesis does not hold for the given codes."""


@dataclass(frozen=True)
class AqcParams:
    """[[n, k, dz/dx]]_4 with k an exact multiple of 1/2.

    ``dz_lower_bound`` marks dz as a designed floor rather than a computed
    distance.
    """

    n: int
    k: Fraction
    dz: int
    dx: int
    dz_lower_bound: bool = False

    def __post_init__(self) -> None:
        k = Fraction(self.k)
        object.__setattr__(self, "k", k)
        if k < 0 or (2 * k).denominator != 1:
            raise ValueError(f"k must be a non-negative multiple of 1/2, got {k}")
        if self.dz < 1 or self.dx < 1:
            raise ValueError(f"distances must be positive, got dz={self.dz}, dx={self.dx}")

    @property
    def singleton_slack(self) -> Fraction:
        return self.n - self.dx - self.dz + 2 - self.k

    @property
    def mds(self) -> bool:
        return self.singleton_slack == 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k_num": self.k.numerator,
            "k_den": self.k.denominator,
            "dz": self.dz,
            "dx": self.dx,
            "mds": self.mds,
            "dz_lower_bound": self.dz_lower_bound,
        }

    @classmethod
    def from_json(cls, data: dict) -> AqcParams:
        return cls(
            data["n"],
            Fraction(data["k_num"], data["k_den"]),
            data["dz"],
            data["dx"],
            data.get("dz_lower_bound", False),
        )

    def __str__(self) -> str:
        dz = f">={self.dz}" if self.dz_lower_bound else str(self.dz)
        return f"[[{self.n},{self.k},{dz}/{self.dx}]]_4" + ("*" if self.mds else "")


@dataclass(frozen=True)
class SingletonCheck:
    holds: bool
    equality: bool

    def __bool__(self) -> bool:
        return self.holds


def singleton_check(p: AqcParams) -> SingletonCheck:
    """k <= n - dx - dz + 2; equality means asymmetric quantum MDS."""
    slack = p.singleton_slack
    return SingletonCheck(slack >= 0, slack == 0)


def _params(n: int, kappa_num: int, kappa_den: int, d1: int, d2: int, bound: bool = False) -> AqcParams:
    return AqcParams(n, Fraction(kappa_num - kappa_den, 2), max(d1, d2), min(d1, d2), bound)


def derive_from_nested(c1: Code, c2: Code, budget: int = DEFAULT_BUDGET) -> AqcParams:
    """Parameters from a pair with trace_dual(c1) inside c2."""
    c1, c2 = as_additive(c1), as_additive(c2)
    if c1.n != c2.n:
        raise PreconditionError(f"length mismatch: {c1.n} != {c2.n}")
    inner = trace_dual(c1)
    if not is_subcode(inner, c2):
        raise PreconditionError("trace dual of C1 is not contained in C2")
    d1 = min_distance(c1, budget)
    d2 = min_distance(c2, budget)
    return _params(c1.n, c2.kappa, inner.kappa, d1, d2)


def _check_dual_distance(code: Code) -> None:
    if not dual_distance_at_least_two(code):
        raise PreconditionError("trace dual of C must be nonzero with minimum distance >= 2")


def s_dual_distance(code: Code, budget: int = DEFAULT_BUDGET) -> int:
    """d(trace_dual(S(C))) from C's weight enumerator (B-coefficients)."""
    data = dual_s_image_wenum(weight_enumerator(code, budget))
    d = data.min_distance
    if d is None:  # pragma: no cover - S(C) is never the whole space
        raise AssertionError("trace dual of S(C) is zero")
    return d


def derive_via_s(
    c: Code, d: Code, *, d_outer: int | None = None, budget: int = DEFAULT_BUDGET
) -> AqcParams:
    """[[2n, log4(|D|/|C|), 2 d(D) / 2]]_4 from C inside D.

    The pair used is C1 = trace_dual(S(C)), C2 = S(D).  d(S(D)) = 2 d(D);
    d(C1) is read off the B-coefficients and equals 2 under the dual
    distance hypothesis.  Pass ``d_outer`` to use a designed lower bound for
    d(D) instead of computing it; the result is then flagged as a bound.
    """
    c, d = as_additive(c), as_additive(d)
    if not is_subcode(c, d):
        raise PreconditionError("C is not a subcode of D")
    _check_dual_distance(c)
    dx = s_dual_distance(c, budget)
    dd = d_outer if d_outer is not None else min_distance(d, budget)
    return _params(2 * c.n, d.kappa, c.kappa, 2 * dd, dx, d_outer is not None)


def derive_from_s_dual(c: Code, budget: int = DEFAULT_BUDGET) -> AqcParams:
    """[[2n, log4(|S(C)^perp| / |S(C)|), 2/2]]_4, taking C1 = C2 = S(C)^perp."""
    c = as_additive(c)
    _check_dual_distance(c)
    dist = s_dual_distance(c, budget)
    n2 = 2 * c.n
    # |S(C)^perp| = 2^(2*n2 - kappa), |S(C)| = 2^kappa
    return _params(n2, 2 * n2 - c.kappa, c.kappa, dist, dist)


prop2_derive = derive_from_s_dual  # public alias


# ----------------------------------------------------------------------------
# weight-n subcodes and the MDS family


def x_plus_one_code(n: int) -> LinearCodeF4:
    """The [n, n-1, 2] cyclic code with generator polynomial X + 1."""
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = row[i + 1] = 1
        rows.append(tuple(row))
    return LinearCodeF4(n, rows)


def find_full_weight_word(
    code: LinearCodeF4, seed: int = DEFAULT_SEED, tries: int = 20000, budget: int = DEFAULT_BUDGET
) -> tuple[int, ...] | None:
    """A codeword with no zero entry, or None if the code has none.

    Random GF(4)-combinations of the generators first; if they all miss and
    the code fits in the budget, every codeword is checked.
    """
    rng = random.Random(seed)
    n = code.n
    for _ in range(tries):
        v = (0,) * n
        for row in code.rows:
            v = gf4.vec_add(v, gf4.scale(rng.randrange(4), row))
        if 0 not in v:
            return v
    if code.size <= budget:
        return next((v for v in enumerate_codewords(code, budget) if 0 not in v), None)
    return None


def full_weight_subcode(
    d: LinearCodeF4, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET
) -> LinearCodeF4:
    """[n, 1, n] subcode of D spanned by one full-weight codeword."""
    v = find_full_weight_word(d, seed=seed, budget=budget)
    if v is None:
        raise PreconditionError(f"code has no codeword of weight {d.n}")
    return LinearCodeF4(d.n, [v])


def two_constructions(
    d: LinearCodeF4, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET
) -> tuple[LinearCodeF4, AqcParams, AqcParams]:
    """(C, Q, Q_S) for a linear code D containing a full-weight word.

    Q comes straight from the nested pair with trace_dual(C1) = C and
    C2 = D; Q_S goes through S.
    """
    c = full_weight_subcode(d, seed=seed, budget=budget)
    q = derive_from_nested(trace_dual(c), d, budget)
    q_s = derive_via_s(c, d, budget=budget)
    return c, q, q_s


def mds_construction(
    n: int, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET
) -> tuple[LinearCodeF4, LinearCodeF4, AqcParams]:
    """(C, D, [[n, n-2, 2/2]]_4) with D generated by X + 1."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    d = x_plus_one_code(n)
    c = full_weight_subcode(d, seed=seed, budget=budget)
    params = derive_from_nested(trace_dual(c), d, budget)
    if not params.mds:  # pragma: no cover - guaranteed by construction
        raise AssertionError(f"{params} is not MDS")
    return c, d, params
