"""MacWilliams transform, Pless power moments and the dual of S(C).

All arithmetic is exact integer arithmetic; a coefficient that does not
divide evenly means the input enumerator was inconsistent and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from skewaqc.codes import WeightEnumerator


class InconsistentEnumerator(ValueError):
    """A transform produced a non-integral or negative coefficient."""


def _exact_div(total: int, m: int, what: str) -> int:
    q, r = divmod(total, m)
    if r:
        raise InconsistentEnumerator(f"{what}: {total}/{m} is not an integer")
    if q < 0:
        raise InconsistentEnumerator(f"{what}: negative coefficient {q}")
    return q


def krawtchouk(j: int, i: int, n: int, q: int = 4) -> int:
    """Coefficient of X^(n-j) Y^j in (X + (q-1)Y)^(n-i) (X - Y)^i."""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
        for s in range(0, min(i, j) + 1)
    )


def macwilliams_transform(w: WeightEnumerator, size: int | None = None) -> WeightEnumerator:
    """Coefficients of (1/M) W(X + 3Y, X - Y)."""
    m = w.size if size is None else size
    if m != w.size:
        raise InconsistentEnumerator(f"coefficients sum to {w.size}, code size given as {m}")
    n = w.n
    out = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(j, i, n) for i, a in enumerate(w.coeffs) if a)
        out.append(_exact_div(total, m, f"B_{j}"))
    return WeightEnumerator(tuple(out))


def s_image_wenum(w: WeightEnumerator) -> WeightEnumerator:
    """Weight enumerator of S(C): weight i moves to weight 2i."""
    out = [0] * (2 * w.n + 1)
    for i, a in enumerate(w.coeffs):
        out[2 * i] = a
    return WeightEnumerator(tuple(out))


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def l_polynomial(i: int, n: int) -> list[int]:
    """Y-coefficients of L_i = (X + 3Y)^(2(n-i)) (X - Y)^(2i), X implied."""
    plus = [comb(n - i, j) * 3**j for j in range(n - i + 1)]
    minus = [comb(i, l) * (-1) ** l for l in range(i + 1)]
    return _convolve(_convolve(plus, plus), _convolve(minus, minus))


@dataclass(frozen=True)
class DualWeightData:
    """B_0..B_2n of the trace dual of S(C), with the size M of C."""

    coeffs: tuple[int, ...]
    source_size: int
    n: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", (len(self.coeffs) - 1) // 2)
        if self.coeffs[0] != 1:
            raise InconsistentEnumerator(f"B_0 = {self.coeffs[0]}, expected 1")
        expected = 4 ** (2 * self.n) // self.source_size
        if sum(self.coeffs) != expected:
            raise InconsistentEnumerator(f"B coefficients sum to {sum(self.coeffs)}, expected {expected}")

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def min_distance(self) -> int | None:
        return next((i for i, b in enumerate(self.coeffs) if i and b), None)

    def as_enumerator(self) -> WeightEnumerator:
        return WeightEnumerator(self.coeffs)


def dual_s_image_wenum(w: WeightEnumerator, size: int | None = None) -> DualWeightData:
    """Enumerator of S(C)'s trace dual from C's enumerator via the L_i sums."""
    m = w.size if size is None else size
    n = w.n
    acc = [0] * (2 * n + 1)
    for i, a in enumerate(w.coeffs):
        if a:
            for j, c in enumerate(l_polynomial(i, n)):
                acc[j] += a * c
    return DualWeightData(tuple(_exact_div(t, m, f"B_{j}") for j, t in enumerate(acc)), m)


@dataclass(frozen=True)
class MomentCheck:
    ok: bool
    failed: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def pless_moment_check(
    w: WeightEnumerator, size: int, n: int, a1_dual: int, a2_dual: int
) -> MomentCheck:
    """First three Pless power moments for q = 4, cleared of denominators."""
    s0 = sum(w.coeffs)
    s1 = sum(i * a for i, a in enumerate(w.coeffs))
    s2 = sum(i * i * a for i, a in enumerate(w.coeffs))
    failed = []
    if s0 != size:
        failed.append(f"moment 0: sum A_i = {s0} != M = {size}")
    if 4 * s1 != size * (3 * n - a1_dual):
        failed.append(f"moment 1: 4*sum i A_i = {4 * s1} != M(3n - A1) = {size * (3 * n - a1_dual)}")
    rhs2 = size * ((9 * n * n + 3 * n) - (6 * n - 2) * a1_dual + 2 * a2_dual)
    if 16 * s2 != rhs2:
        failed.append(f"moment 2: 16*sum i^2 A_i = {16 * s2} != {rhs2}")
    return MomentCheck(not failed, tuple(failed))
