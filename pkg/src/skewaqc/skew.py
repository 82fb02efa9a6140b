"""The skew polynomial ring GF(4)[X; theta] with theta the Frobenius.

Multiplication obeys X a = theta(a) X = a^2 X.  The ring is left and right
Euclidean; module theta-cyclic codes are the left multiples of a right
divisor g of X^n - 1.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Sequence

from skewaqc import gf2, gf4, linalg
from skewaqc.codes import Code, LinearCodeF4, as_additive, shift_packed
from skewaqc.gf4 import _CONJ, _MUL, f4_inv, theta_pow


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class SkewPoly:
    """An element a_0 + a_1 X + ... of GF(4)[X; theta].

    Coefficients are GF(4) integers, lowest degree first, with no trailing
    zeros; the zero polynomial has an empty coefficient tuple and degree
    ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = _trim(coeffs)
        if any(a not in (0, 1, 2, 3) for a in c):
            raise ValueError(f"coefficients must lie in GF(4): {c}")
        self.coeffs: tuple[int, ...] = c

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> SkewPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def x_n_minus(cls, n: int, c: int = 1) -> SkewPoly:
        """X^n - c (= X^n + c in characteristic 2)."""
        return cls([c] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: SkewPoly) -> SkewPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return SkewPoly(x ^ (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __sub__ = __add__

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return skew_mul(self, other)

    def __str__(self) -> str:
        return gf4.format_poly(self.coeffs, "X")

    def __repr__(self) -> str:
        return f"SkewPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> SkewPoly:
        """Parse ``"W + w*X + X^2"``; symbols are 0 1 w W."""
        coeffs: dict[int, int] = {}
        for term in text.replace("-", "+").split("+"):
            term = term.strip()
            if not term:
                continue
            m = re.fullmatch(r"(?:([01wW])\s*\*?\s*)?(X(?:\s*\^\s*(\d+))?)?", term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse skew polynomial term {term!r}")
            c = gf4.parse_symbol(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                deg = 0
            else:
                deg = int(m.group(3)) if m.group(3) else 1
            coeffs[deg] = coeffs.get(deg, 0) ^ c
        top = max(coeffs, default=-1)
        return cls(coeffs.get(i, 0) for i in range(top + 1))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product with (a X^i)(b X^j) = a theta^i(b) X^(i+j)."""
    if f.is_zero or g.is_zero:
        return SkewPoly()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        row = _MUL[a]
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] ^= row[theta_pow(b, i)]
    return SkewPoly(out)


def _right_rem(f: Sequence[int], g: Sequence[int]) -> tuple[list[int], list[int]]:
    """Core of right division on trimmed coefficient sequences."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    q = [0] * max(0, len(r) - dg)
    while len(r) - 1 >= dg:
        e = len(r) - 1 - dg
        c = _MUL[r[-1]][f4_inv(theta_pow(lg, e))]
        q[e] = c
        row = _MUL[c]
        odd = e & 1
        for j, b in enumerate(g):
            if b:
                r[e + j] ^= row[_CONJ[b] if odd else b]
        while r and r[-1] == 0:
            r.pop()
    return q, r


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(Q, R) with f = Q * g + R and deg R < deg g."""
    if g.is_zero:
        raise ZeroDivisionError("right division by the zero polynomial")
    q, r = _right_rem(f.coeffs, g.coeffs)
    return SkewPoly(q), SkewPoly(r)


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return right_divmod(f, g)[1].is_zero


def module_theta_cyclic_code(g: SkewPoly, n: int) -> LinearCodeF4:
    """The [n, n - deg g] code of left multiples of g modulo X^n - 1.

    Row i of the generator matrix is theta^i applied to the coefficients of
    g, shifted i places to the right.
    """
    if g.is_zero:
        raise ValueError("generator polynomial is zero")
    r = len(g.coeffs) - 1
    if not r < n:
        raise ValueError(f"deg g = {r} must be below the length {n}")
    if not right_divides(g, SkewPoly.x_n_minus(n)):
        raise ValueError(f"{g} does not right-divide X^{n} - 1")
    rows = []
    for i in range(n - r):
        row = [0] * n
        for j, b in enumerate(g.coeffs):
            row[i + j] = theta_pow(b, i)
        rows.append(tuple(row))
    return LinearCodeF4(n, rows)


def theta_shift_packed(x: int, n: int) -> int:
    """(v_0..v_{n-1}) -> (theta(v_{n-1}), theta(v_0), ..., theta(v_{n-2}))."""
    return shift_packed(gf2.conj_packed(x, n), n, 1)


def is_skew_cyclic(code: Code) -> bool:
    """Closed under the conjugate-and-shift map; checked on generators."""
    add = as_additive(code)
    return all(add.contains_packed(theta_shift_packed(x, add.n)) for x in add.basis)


MAX_ENUM_LENGTH = 12


def enumerate_skew_cyclic_generators(n: int, r: int) -> list[SkewPoly]:
    """Monic degree-r right divisors of X^n - 1 with nonzero constant term."""
    if not 1 <= n <= MAX_ENUM_LENGTH:
        raise ValueError(f"length {n} outside the enumerable range 1..{MAX_ENUM_LENGTH}")
    if not 1 <= r < n:
        raise ValueError(f"degree {r} must satisfy 1 <= r < n = {n}")
    f = SkewPoly.x_n_minus(n).coeffs
    found = []
    for c0 in (1, 2, 3):
        for mid in itertools.product(range(4), repeat=r - 1):
            g = (c0, *mid, 1)
            if not _right_rem(f, g)[1]:
                found.append(SkewPoly(g))
    return found


def generator_polynomial(code: LinearCodeF4) -> SkewPoly:
    """The monic nonzero codeword polynomial of least degree.

    For a module theta-cyclic code this recovers g from any generator
    matrix, e.g. one printed in reduced rather than staircase form.
    Computed by row reduction with columns ordered from high degree to low.
    """
    n = code.n
    rev = [list(reversed(row)) for row in code.rows]
    red, _ = linalg.rref(rev, gf4.f4_mul, gf4.f4_inv)
    if not red:
        raise ValueError("zero code has no generator polynomial")
    return SkewPoly(reversed(red[-1][:n]))
