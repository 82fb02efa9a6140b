"""Arithmetic in GF(4) and its extensions GF(4^m).

Elements of GF(4) are the integers 0..3 read as coordinates over the basis
{1, w}: bit 0 is the coefficient of 1 and bit 1 the coefficient of w.  So

    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2 = w + 1

and addition is XOR.  Vectors are plain tuples of these integers.

Elements of GF(4^m) are integers too: coordinate j (the coefficient of y^j
in the polynomial basis) sits in bits 2j, 2j+1.  Addition is again XOR.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence

ZERO, ONE, W, W2 = 0, 1, 2, 3

SYMBOLS = "01wW"

# fmt: off
_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
# fmt: on
_INV = (None, 1, 3, 2)
_CONJ = (0, 1, 3, 2)

F4Vector = tuple[int, ...]


def f4_add(a: int, b: int) -> int:
    return a ^ b


def f4_mul(a: int, b: int) -> int:
    return _MUL[a][b]


def f4_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return _INV[a]


def conjugate(a: int) -> int:
    """Frobenius conjugate a -> a^2; swaps w and w^2."""
    return _CONJ[a]


def f4_pow(a: int, e: int) -> int:
    if a == 0:
        return 0 if e else 1
    r = 1
    for _ in range(e % 3):
        r = _MUL[r][a]
    return r


def theta_pow(a: int, i: int) -> int:
    """Apply the Frobenius i times."""
    return _CONJ[a] if i & 1 else a


def parse_symbol(token: str) -> int:
    try:
        return SYMBOLS.index(token)
    except ValueError:
        raise ValueError(f"not a GF(4) symbol: {token!r} (expected one of 0 1 w W)") from None


def format_symbol(a: int) -> str:
    return SYMBOLS[a]


def parse_vector(text: str) -> F4Vector:
    """Parse ``"1 0 W w"`` or ``"10Ww"`` into a vector."""
    tokens = text.split() if any(c.isspace() for c in text.strip()) else list(text.strip())
    return tuple(parse_symbol(t) for t in tokens)


def format_vector(v: Sequence[int]) -> str:
    return " ".join(SYMBOLS[a] for a in v)


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def scale(c: int, v: Sequence[int]) -> F4Vector:
    row = _MUL[c]
    return tuple(row[a] for a in v)


def vec_add(u: Sequence[int], v: Sequence[int]) -> F4Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return tuple(a ^ b for a, b in zip(u, v))


def hermitian_inner(u: Sequence[int], v: Sequence[int]) -> int:
    """Sum of u_i * v_i^2."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    acc = 0
    for a, b in zip(u, v):
        acc ^= _MUL[a][_CONJ[b]]
    return acc


def trace_hermitian_inner(u: Sequence[int], v: Sequence[int]) -> int:
    """Sum of u_i * v_i^2 + u_i^2 * v_i; always 0 or 1."""
    h = hermitian_inner(u, v)
    return h ^ _CONJ[h]


# ----------------------------------------------------------------------------
# polynomials over GF(4), coefficient lists low degree first


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: Sequence[int], m: Sequence[int]) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = _poly_trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] ^= _MUL[c][mc]
        _poly_trim(a)
    return a


def _monic_polys(degree: int):
    """Monic polynomials of a given degree, in lexicographic order of the
    coefficients read from degree-1 down to the constant term."""
    for coeffs in itertools.product(range(4), repeat=degree):
        yield list(reversed(coeffs)) + [1]


def is_irreducible(poly: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(d):
            if not _poly_mod(poly, f):
                return False
    return True


def first_irreducible(degree: int) -> tuple[int, ...]:
    for f in _monic_polys(degree):
        if is_irreducible(f):
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


# ----------------------------------------------------------------------------
# extension fields


class ExtField:
    """The field GF(4^m) built as GF(4)[y] / (modulus).

    The modulus is the lexicographically first monic irreducible polynomial
    of degree m (``y`` for m = 1, ``y^2 + y + w`` for m = 2, ``y^3 + w`` for
    m = 3).  The fixed generator is the primitive element with the smallest
    integer encoding; ``nonzero_elements()`` lists its powers 1, g, g^2, ...
    """

    def __init__(self, m: int, modulus: Sequence[int] | None = None) -> None:
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = first_irreducible(m)
        modulus = tuple(modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}: {modulus}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {format_poly(modulus, 'y')} is reducible over GF(4)")
        self.m = m
        self.q = 4**m
        self.modulus = modulus

        q = self.q
        self._exp: list[int] = []
        self._log: list[int | None] = [None] * q
        for cand in range(2, q):
            if self._try_generator(cand):
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise RuntimeError("no primitive element found")
        self.generator = self._exp[1]

    # raw polynomial multiplication, used only while building the tables
    def _mul_raw(self, a: int, b: int) -> int:
        ca, cb = self.to_coords(a), self.to_coords(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] ^= _MUL[x][y]
        return self.from_coords(_poly_mod(prod, self.modulus))

    def _try_generator(self, g: int) -> bool:
        exp = [1]
        x = g
        while x != 1:
            exp.append(x)
            x = self._mul_raw(x, g)
        if len(exp) != self.q - 1:
            return False
        self._exp = exp + exp  # doubled so that exp[i + j] needs no reduction
        for i, e in enumerate(exp):
            self._log[e] = i
        return True

    def to_coords(self, x: int) -> tuple[int, ...]:
        return tuple((x >> (2 * j)) & 3 for j in range(self.m))

    def from_coords(self, coords: Sequence[int]) -> int:
        x = 0
        for j, c in enumerate(coords):
            x |= c << (2 * j)
        return x

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self._log[a]

    def embed(self, a: int) -> int:
        """The GF(4) element a as a constant of this field."""
        return a

    def scalar_mul(self, c: int, x: int) -> int:
        """GF(4) scalar times field element: coordinate-wise."""
        row = _MUL[c]
        return self.from_coords(row[a] for a in self.to_coords(x))

    def nonzero_elements(self) -> list[int]:
        """alpha_1, ..., alpha_{q-1} as increasing powers of the generator."""
        return self._exp[: self.q - 1]

    def elements(self) -> range:
        return range(self.q)

    def frobenius(self, x: int) -> int:
        """x -> x^4, the generator of Gal(GF(4^m)/GF(4))."""
        return self.pow(x, 4)

    def __repr__(self) -> str:
        return f"ExtField(m={self.m}, modulus={format_poly(self.modulus, 'y')})"


@functools.lru_cache(maxsize=None)
def ext_field(m: int) -> ExtField:
    return ExtField(m)


def format_poly(coeffs: Sequence[int], var: str = "X") -> str:
    """Render low-degree-first coefficients as ``a0 + a1*X + ...``."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(SYMBOLS[c])
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{SYMBOLS[c]}*{mono}")
    return " + ".join(terms) if terms else "0"
