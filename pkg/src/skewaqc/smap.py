"""The doubling map S and the position permutations attached to it.

S sends (v_0, ..., v_{n-1}) to (v_0, conj v_0, v_1, conj v_1, ...).  It is
GF(2)-linear, doubles Hamming weight and makes every code self-orthogonal
under the trace-Hermitian form.  On images of skew-cyclic codes the
conjugate-then-shift symmetry becomes the coordinate permutation ``sigma``;
relabelling positions by ``sigma_prime`` (odd n) or ``sigma_double_prime``
(even n) turns it into an ordinary cyclic / 2-quasi-cyclic shift.

Positions are 1-based throughout, matching cycle notation on [2n].
"""

from __future__ import annotations

from collections.abc import Sequence

from skewaqc import gf4
from skewaqc.codes import (
    AdditiveCodeF4,
    Code,
    as_additive,
    is_invariant_under,
    permute_code,
)
from skewaqc.gf4 import F4Vector
from skewaqc.perm import IndexPermutation, permutation_order
from skewaqc.skew import is_skew_cyclic

__all__ = [
    "IndexPermutation",
    "equivalent_shift_image",
    "induced_apply",
    "pair_swap",
    "permutation_order",
    "s_apply",
    "s_apply_code",
    "s_apply_packed",
    "sigma",
    "sigma_double_prime",
    "sigma_prime",
]


def s_apply(v: Sequence[int]) -> F4Vector:
    out = []
    for a in v:
        out.append(a)
        out.append(gf4.conjugate(a))
    return tuple(out)


def s_apply_packed(x: int, n: int) -> int:
    """S on a packed length-n vector, giving a packed length-2n vector."""
    out = 0
    for i in range(n):
        a = (x >> (2 * i)) & 3
        out |= (a | (gf4.conjugate(a) << 2)) << (4 * i)
    return out


def s_apply_code(code: Code) -> AdditiveCodeF4:
    """Image S(C) as the GF(2)-span of S applied to a GF(2)-basis of C."""
    add = as_additive(code)
    return AdditiveCodeF4.from_packed(2 * add.n, (s_apply_packed(x, add.n) for x in add.basis))


def sigma(n: int) -> IndexPermutation:
    """On [2n]: odd i -> i + 3, even i -> i + 1, modulo 2n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    size = 2 * n
    return IndexPermutation([(i + (3 if i % 2 else 1) - 1) % size + 1 for i in range(1, size + 1)])


def pair_swap(n: int) -> IndexPermutation:
    """tau = (1,2)(3,4)...(2n-1,2n)."""
    return IndexPermutation([i + 1 if i % 2 else i - 1 for i in range(1, 2 * n + 1)])


def _orbit(p: IndexPermutation, start: int, length: int) -> list[int]:
    """[start, p(start), p^2(start), ...] of the given length."""
    out = [start]
    for _ in range(length - 1):
        out.append(p(out[-1]))
    return out


def sigma_prime(n: int) -> IndexPermutation:
    """For odd n: j -> sigma^(2n - j)(1)."""
    if n % 2 == 0:
        raise ValueError(f"sigma_prime needs odd n, got {n}")
    size = 2 * n
    orbit = _orbit(sigma(n), 1, size)  # orbit[k] = sigma^k(1)
    return IndexPermutation([orbit[(size - j) % size] for j in range(1, size + 1)])


def sigma_double_prime(n: int) -> IndexPermutation:
    """For even n: 2b-1 -> sigma^(n-b)(1) and 2b -> sigma^(n-b)(2)."""
    if n % 2:
        raise ValueError(f"sigma_double_prime needs even n, got {n}")
    s = sigma(n)
    o1, o2 = _orbit(s, 1, n), _orbit(s, 2, n)
    image = []
    for b in range(1, n + 1):
        image += [o1[(n - b) % n], o2[(n - b) % n]]
    return IndexPermutation(image)


def induced_apply(p: IndexPermutation, v: Sequence[int]) -> F4Vector:
    """result[j] = v[p(j)]."""
    return p.apply(v)


def equivalent_shift_image(code: Code) -> tuple[AdditiveCodeF4, str]:
    """Relabel S(C) of a skew-cyclic C into a shift-invariant code.

    Returns ``(Sigma'(S(C)), "cyclic")`` for odd n and
    ``(Sigma''(S(C)), "2-quasi-cyclic")`` for even n, after checking the
    claimed invariance.
    """
    add = as_additive(code)
    if not is_skew_cyclic(add):
        raise ValueError("code is not skew-cyclic")
    n = add.n
    image = s_apply_code(add)
    if n % 2:
        p, kind, step = sigma_prime(n), "cyclic", 1
    else:
        p, kind, step = sigma_double_prime(n), "2-quasi-cyclic", 2
    relabelled = permute_code(image, p)
    shift = IndexPermutation.shift(2 * n, step)
    if not is_invariant_under(relabelled, shift):
        raise AssertionError(f"relabelled image is not {kind}")  # would be a bug
    return relabelled, kind

