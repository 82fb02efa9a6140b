"""Reproduction suites behind ``skewaqc reproduce``.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.  Suites are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from skewaqc import gf4
from skewaqc.aqc import AqcParams, derive_from_nested, derive_via_s, mds_construction
from skewaqc.codefile import eqn4_code, eqn7_code
from skewaqc.codes import (
    AdditiveCodeF4,
    is_invariant_under,
    is_subcode,
    min_distance,
    repetition_code,
    trace_dual,
    weight_enumerator,
)
from skewaqc.perm import IndexPermutation, permutation_order
from skewaqc.reference_data import PUBLISHED_TABLES
from skewaqc.rs_concat import concat_pair, extended_rs, reproduce_table
from skewaqc.skew import SkewPoly, right_divmod, skew_mul
from skewaqc.smap import (
    equivalent_shift_image,
    pair_swap,
    s_apply,
    s_apply_code,
    sigma,
    sigma_double_prime,
    sigma_prime,
)
from skewaqc.wenum import dual_s_image_wenum, macwilliams_transform, s_image_wenum

SUITES = ("examples", "table2", "table3", "properties")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _check(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {got}, want {want}")


def _v(text: str) -> tuple[int, ...]:
    return gf4.parse_vector(text)


def examples() -> list[Check]:
    out = []
    u = _v("w W")
    out.append(_check("S((w,W))", s_apply(u), _v("w W W w")))
    wu = gf4.scale(gf4.W, u)
    out.append(_check("S(w*u)", s_apply(wu), _v("W w 1 1")))
    out.append(_check("w*S(u)", gf4.scale(gf4.W, s_apply(u)), _v("W 1 1 W")))

    out.append(_check("sigma(4)", str(sigma(4)), "(1,4,5,8)(2,3,6,7)"))
    out.append(_check("sigma''(4)", str(sigma_double_prime(4)), "(1,8,2,7)(3,5,4,6)"))
    out.append(_check("sigma(7)", str(sigma(7)), "(1,4,5,8,9,12,13,2,3,6,7,10,11,14)"))
    out.append(_check("sigma'(7)", str(sigma_prime(7)), "(1,14)(2,11,8,13,4,7)(3,10,9,12,5,6)"))

    v4 = s_apply(_v("1 0 W w"))
    s4, sd4 = sigma(4), sigma_double_prime(4)
    out.append(_check("n=4 Sigma''(Sigma(v))", sd4.apply(s4.apply(v4)), _v("1 1 W w W w 0 0")))
    out.append(_check("n=4 Sigma''(v)", sd4.apply(v4), _v("W w W w 0 0 1 1")))
    v7 = _v("1 1 1 1 0 0 1 1 0 0 0 0 0 0")
    s7, sp7 = sigma(7), sigma_prime(7)
    out.append(_check("n=7 Sigma'(Sigma(v))", sp7.apply(s7.apply(v7)), _v("1 0 0 0 1 0 1 1 0 0 0 1 0 1")))
    out.append(_check("n=7 Sigma'(v)", sp7.apply(v7), _v("0 0 0 1 0 1 1 0 0 0 1 0 1 1")))

    c4, c7 = eqn4_code(), eqn7_code()
    out.append(_check("d([4,2,3])", min_distance(c4), 3))
    out.append(_check("d([7,4,3])", min_distance(c7), 3))
    img4, kind4 = equivalent_shift_image(c4)
    img7, kind7 = equivalent_shift_image(c7)
    out.append(_check("n=4 image", (img4.n, img4.size, min_distance(img4), kind4), (8, 16, 6, "2-quasi-cyclic")))
    out.append(_check("n=7 image", (img7.n, img7.size, min_distance(img7), kind7), (14, 256, 6, "cyclic")))

    rep4 = repetition_code(4)
    out.append(_check("nested pair", str(derive_from_nested(trace_dual(rep4), c4)), "[[4,1,3/2]]_4*"))
    out.append(_check("via S", str(derive_via_s(rep4, c4)), "[[8,1,6/2]]_4"))
    for n in range(2, 11):
        rep = repetition_code(n)
        out.append(_check(f"via S rep{n}", derive_via_s(rep, rep), AqcParams(2 * n, Fraction(0), 2 * n, 2)))
    return out


def table(m: int) -> list[Check]:
    published = PUBLISHED_TABLES[m]
    rows = reproduce_table(m)
    out = [_check(f"rows (m={m})", len(rows), len(published))]
    for r in rows:
        out.append(_check(f"m={m} k={r.k}", (r.k_prime, r.dz_floor), published[r.k]))
        if not r.params.dz_lower_bound:
            out.append(Check(f"m={m} k={r.k} flagged", False, "dz should be a designed floor"))
    if m == 2:
        for k in (1, 2, 3):
            out.append(_check(f"d(RS[16,{k}])", extended_rs(2, k).min_distance(), 17 - k))
    return out


def table2() -> list[Check]:
    return table(2)


def table3() -> list[Check]:
    return table(3)


def random_additive_code(rng: random.Random, n: int, kappa: int) -> AdditiveCodeF4:
    return AdditiveCodeF4.from_packed(n, (rng.getrandbits(2 * n) for _ in range(kappa)))


def properties(n_max: int = 8, seed: int = 0, trials: int = 40) -> list[Check]:
    """Module invariants on random inputs of length up to ``n_max``."""
    rng = random.Random(seed)
    out = []

    bad = [n for n in range(2, 17) if permutation_order(sigma(n)) != (2 * n if n % 2 else n)]
    out.append(Check("order of sigma", not bad, f"failures at n={bad}"))
    bad = [n for n in range(3, 17, 2) if sigma(n) ** n != pair_swap(n)]
    out.append(Check("sigma^n = tau (odd n)", not bad, f"failures at n={bad}"))
    bad = []
    for n in range(1, 17):
        t2 = IndexPermutation.shift(2 * n, 2)
        if not (pair_swap(n) * t2 == sigma(n) == t2 * pair_swap(n)):
            bad.append(n)
    out.append(Check("sigma = tau T^2 = T^2 tau", not bad, f"failures at n={bad}"))

    fails: list[str] = []
    for _ in range(trials):
        n = rng.randint(1, n_max)
        c = random_additive_code(rng, n, rng.randint(0, min(2 * n, 8)))
        s = s_apply_code(c)
        if not is_subcode(s, trace_dual(s)):
            fails.append(f"self-orthogonality n={n}")
        v = tuple(rng.randrange(4) for _ in range(n))
        if gf4.weight(s_apply(v)) != 2 * gf4.weight(v):
            fails.append(f"weight doubling {v}")
        if n <= 6:
            w = weight_enumerator(c)
            if macwilliams_transform(w) != weight_enumerator(trace_dual(c)):
                fails.append(f"MacWilliams n={n}")
            b = dual_s_image_wenum(w).as_enumerator()
            if b != weight_enumerator(trace_dual(s)) or b != macwilliams_transform(s_image_wenum(w)):
                fails.append(f"dual of S(C) n={n}")
        if trace_dual(trace_dual(c)) != c:
            fails.append(f"dual involution n={n}")
    out.append(Check("random code invariants", not fails, "; ".join(fails[:5])))

    fails = []
    for _ in range(10 * trials):
        f = SkewPoly(rng.randrange(4) for _ in range(rng.randint(0, 2 * n_max)))
        g = SkewPoly([*(rng.randrange(4) for _ in range(rng.randint(0, n_max))), rng.randint(1, 3)])
        q, r = right_divmod(f, g)
        if skew_mul(q, g) + r != f or r.degree >= g.degree:
            fails.append(f"{f} / {g}")
    out.append(Check("right division round trip", not fails, "; ".join(fails[:5])))

    for n in range(3, min(n_max, 20) + 1):
        c, d, p = mds_construction(n, seed=seed)
        word = c.rows[0]
        ok = p.mds and p == AqcParams(n, Fraction(n - 2), 2, 2) and 0 not in word and word in d
        out.append(Check(f"MDS family n={n}", ok, str(p)))

    pair = concat_pair(1, 2)
    out.append(_check("concat m=1 k=2", (pair.c.n, pair.d.k, pair.exact_distance), (4, 2, 3)))
    out.append(Check("C in D (m=1 k=2)", is_subcode(pair.c, pair.d)))
    return out


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "examples": examples,
    "table2": table2,
    "table3": table3,
    "properties": properties,
}
