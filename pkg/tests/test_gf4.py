from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import CONJ, MUL
from skewaqc import gf4
from skewaqc.gf4 import ExtField, ext_field

from conftest import f4, vectors


class TestScalars:
    def test_examples(self):
        assert gf4.f4_mul(gf4.W, gf4.W) == gf4.W2
        assert gf4.f4_mul(gf4.W, gf4.W2) == gf4.ONE
        assert gf4.f4_mul(gf4.ZERO, gf4.W) == gf4.ZERO
        assert gf4.conjugate(gf4.W) == gf4.W2
        assert gf4.conjugate(1) == 1 and gf4.conjugate(0) == 0

    def test_w_squared_is_w_plus_one(self):
        assert gf4.f4_mul(gf4.W, gf4.W) == gf4.f4_add(gf4.W, gf4.ONE)

    def test_table_matches_hand_table(self):
        for a, b in itertools.product(range(4), repeat=2):
            assert gf4.f4_mul(a, b) == MUL[a][b]

    def test_multiplicative_group_is_cyclic_of_order_3(self):
        assert {gf4.f4_pow(gf4.W, e) for e in range(3)} == {1, 2, 3}
        assert gf4.f4_pow(gf4.W, 3) == 1

    @given(f4, f4, f4)
    def test_field_axioms(self, a, b, c):
        m, add = gf4.f4_mul, gf4.f4_add
        assert m(a, b) == m(b, a)
        assert m(a, m(b, c)) == m(m(a, b), c)
        assert m(a, add(b, c)) == add(m(a, b), m(a, c))
        assert m(1, a) == a

    @given(st.integers(1, 3))
    def test_inverse(self, a):
        assert gf4.f4_mul(a, gf4.f4_inv(a)) == 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            gf4.f4_inv(0)

    @given(f4)
    def test_conjugate_is_square_and_involution(self, a):
        assert gf4.conjugate(a) == gf4.f4_mul(a, a)
        assert gf4.conjugate(gf4.conjugate(a)) == a


class TestVectors:
    def test_parse_and_format(self):
        assert gf4.parse_vector("1 0 W w") == (1, 0, 3, 2)
        assert gf4.parse_vector("10Ww") == (1, 0, 3, 2)
        assert gf4.format_vector((1, 0, 3, 2)) == "1 0 W w"
        with pytest.raises(ValueError):
            gf4.parse_vector("1 2")

    def test_vec_add_length_mismatch(self):
        with pytest.raises(ValueError):
            gf4.vec_add((1,), (1, 1))

    @given(st.integers(1, 6).flatmap(lambda n: st.tuples(vectors(n), vectors(n))))
    def test_inner_products_match_oracle(self, uv):
        u, v = uv
        herm = 0
        for a, b in zip(u, v):
            herm ^= MUL[a][CONJ[b]]
        assert gf4.hermitian_inner(u, v) == herm
        assert gf4.trace_hermitian_inner(u, v) == herm ^ CONJ[herm]
        assert gf4.trace_hermitian_inner(u, v) in (0, 1)
        assert gf4.trace_hermitian_inner(u, v) == gf4.trace_hermitian_inner(v, u)

    def test_hermitian_inner_example(self):
        # <(1, w), (1, w)> = 1 + w * w^2 = 0
        assert gf4.hermitian_inner((1, 2), (1, 2)) == 0


def _naive_mul(f: ExtField, a: int, b: int) -> int:
    """Schoolbook product of coordinate polynomials, reduced by the modulus."""
    ca, cb = f.to_coords(a), f.to_coords(b)
    prod = [0] * (2 * f.m)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] ^= MUL[x][y]
    mod = f.modulus
    for d in range(len(prod) - 1, f.m - 1, -1):
        c = prod[d]
        if c:
            for j, mj in enumerate(mod):
                prod[d - f.m + j] ^= MUL[c][mj]
    return f.from_coords(prod[: f.m])


class TestExtField:
    def test_frozen_moduli(self):
        assert ext_field(2).modulus == (2, 1, 1)  # y^2 + y + w
        assert ext_field(3).modulus == (2, 0, 0, 1)  # y^3 + w

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_modulus_has_no_roots(self, m):
        # degree <= 3: irreducible iff no root in GF(4)
        f = ext_field(m)
        if m == 1:
            return
        for x in range(4):
            acc = 0
            for j, c in enumerate(f.modulus):
                acc ^= MUL[c][gf4.f4_pow(x, j)]
            assert acc != 0

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError):
            ExtField(2, (1, 0, 1))  # y^2 + 1 = (y + 1)^2
        with pytest.raises(ValueError):
            ExtField(2, (1, 1, 2))  # not monic

    @pytest.mark.parametrize("m", [1, 2])
    def test_mul_matches_schoolbook(self, m):
        f = ext_field(m)
        for a, b in itertools.product(range(f.q), repeat=2):
            assert f.mul(a, b) == _naive_mul(f, a, b)

    def test_mul_matches_schoolbook_gf64_sample(self):
        f = ext_field(3)
        for a in range(0, 64, 5):
            for b in range(64):
                assert f.mul(a, b) == _naive_mul(f, a, b)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_generator_is_primitive_and_ordering(self, m):
        f = ext_field(m)
        alphas = f.nonzero_elements()
        assert len(set(alphas)) == f.q - 1 and 0 not in alphas
        assert alphas[0] == 1 and alphas[1] == f.generator
        for i in range(1, f.q - 1):
            assert alphas[i] == f.mul(alphas[i - 1], f.generator)

    @pytest.mark.parametrize("m", [2, 3])
    def test_every_element_satisfies_x_to_the_q(self, m):
        f = ext_field(m)
        assert all(f.pow(x, f.q) == x for x in f.elements())

    @given(st.integers(0, 63), st.integers(1, 63))
    def test_inverse_gf64(self, a, b):
        f = ext_field(3)
        assert f.mul(b, f.inv(b)) == 1
        assert f.mul(f.mul(a, b), f.inv(b)) == a

    def test_subfield_embedding(self):
        f = ext_field(2)
        for a, b in itertools.product(range(4), repeat=2):
            assert f.mul(f.embed(a), f.embed(b)) == f.embed(MUL[a][b])
        for c, x in itertools.product(range(4), range(16)):
            assert f.scalar_mul(c, x) == f.mul(f.embed(c), x)


def test_format_poly():
    assert gf4.format_poly((3, 2, 1), "X") == "W + w*X + X^2"
    assert gf4.format_poly((), "X") == "0"
