from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewaqc import linalg
from skewaqc.aqc import AqcParams
from skewaqc.codes import LinearCodeF4, is_subcode, min_distance, repetition_code
from skewaqc.gf4 import ext_field, scale
from skewaqc.reference_data import PUBLISHED_TABLES, TABLE_GF16, TABLE_GF64
from skewaqc.rs_concat import (
    concat_pair,
    default_basis,
    evaluation_generator,
    expand_code,
    extended_rs,
    format_table,
    phi,
    phi_star,
    power_sum,
    reproduce_table,
    concatenated_rs_params,
)

F16 = ext_field(2)


def _same_row_space(f, a, b) -> bool:
    ra = len(linalg.rref(a, f.mul, f.inv)[0])
    rb = len(linalg.rref(b, f.mul, f.inv)[0])
    rab = len(linalg.rref(list(a) + list(b), f.mul, f.inv)[0])
    return ra == rb == rab


class TestExtendedRs:
    def test_full_space(self):
        rs = extended_rs(2, 16)
        assert rs.parity == () and len(rs.generator) == 16

    def test_repetition(self):
        rs = extended_rs(2, 1)
        assert rs.contains([1] * 16)
        assert rs.min_distance() == 16

    @pytest.mark.parametrize("m,k", [(1, k) for k in range(1, 5)] + [(2, 1), (2, 2), (2, 3)])
    def test_mds_by_enumeration(self, m, k):
        rs = extended_rs(m, k)
        assert rs.min_distance() == rs.q - k + 1 == rs.designed_distance

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matches_evaluation_form(self, m):
        f = ext_field(m)
        for k in (1, 2, 3, f.q // 2, f.q - 1, f.q):
            rs = extended_rs(m, k)
            ev = evaluation_generator(f, k)
            assert all(rs.contains(r) for r in ev)
            assert _same_row_space(f, rs.generator, ev)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_power_sums_vanish(self, m):
        f = ext_field(m)
        for j in range(1, f.q - 1):
            assert power_sum(f, j) == 0
        assert power_sum(f, f.q - 1) == 1  # q - 1 terms equal to 1, and q - 1 is odd

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_all_ones_in_every_code(self, m):
        f = ext_field(m)
        for k in range(1, f.q + 1, max(1, f.q // 8)):
            assert extended_rs(m, k).contains([1] * f.q)

    def test_parity_layout(self):
        rs = extended_rs(2, 14)
        alphas = F16.nonzero_elements()
        assert rs.parity[0] == (1,) * 16
        assert rs.parity[1] == tuple(alphas) + (0,)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            extended_rs(2, 0)
        with pytest.raises(ValueError):
            extended_rs(2, 17)


class TestPhi:
    def test_examples(self):
        assert phi_star([0] * 5, F16) == (0,) * 10
        assert phi_star([1] * 16, F16) == (1, 0) * 16
        b = default_basis(F16)
        assert b[0] == 1 and b[1] == F16.generator

    @given(st.integers(0, 15), st.integers(1, 3))
    def test_weight_one_image(self, x, pos):
        v = [0] * 4
        v[pos] = x
        w = sum(1 for a in phi_star(v, F16) if a)
        assert w == 0 if x == 0 else 1 <= w <= 2

    def test_bijective_on_field(self):
        for m in (1, 2, 3):
            f = ext_field(m)
            images = {phi(x, f) for x in f.elements()}
            assert len(images) == f.q

    @given(st.lists(st.integers(0, 15), min_size=1, max_size=6), st.data())
    def test_linear_and_weight_non_decreasing(self, v, data):
        u = data.draw(st.lists(st.integers(0, 15), min_size=len(v), max_size=len(v)))
        c = data.draw(st.integers(0, 3))
        s = lambda w: [F16.scalar_mul(c, x) for x in w]  # noqa: E731
        add = [a ^ b for a, b in zip(u, v)]
        pu, pv = phi_star(u, F16), phi_star(v, F16)
        assert phi_star(add, F16) == tuple(a ^ b for a, b in zip(pu, pv))
        assert phi_star(s(v), F16) == scale(c, pv)
        assert sum(1 for a in pv if a) >= sum(1 for a in v if a)

    def test_custom_basis(self):
        g = F16.generator
        basis = (F16.pow(g, 3), F16.pow(g, 7))
        table = {phi(x, F16, basis) for x in F16.elements()}
        assert len(table) == 16
        with pytest.raises(ValueError, match="not a GF"):
            phi(1, F16, (1, F16.embed(2)))


class TestConcatPair:
    def test_base_case(self):
        pair = concat_pair(1, 2)
        assert pair.c == repetition_code(4)
        assert pair.d.k == 2 and min_distance(pair.d) == 3
        assert is_subcode(pair.c, pair.d)

    def test_gf16_repetition(self):
        pair = concat_pair(2, 1)
        assert pair.d.n == 32 and pair.d.k == 2
        assert pair.exact_distance == min_distance(pair.d) == 16

    @pytest.mark.parametrize("k", range(1, 17))
    def test_gf16_nesting(self, k):
        pair = concat_pair(2, k)
        assert (pair.d.n, pair.d.k) == (32, 2 * k)
        assert (1,) * 32 in pair.d
        assert is_subcode(pair.c, pair.c_prime) and is_subcode(pair.c_prime, pair.d)
        assert pair.c_prime == LinearCodeF4(32, [(1, 0) * 16, (0, 1) * 16])

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_designed_floor_is_honest(self, k):
        pair = concat_pair(2, k)
        assert pair.exact_distance >= 17 - k

    def test_expansion_preserves_nesting(self):
        small, big = extended_rs(2, 3), extended_rs(2, 5)
        assert is_subcode(expand_code(small.generator, F16), expand_code(big.generator, F16))

    def test_other_basis(self):
        g = F16.generator
        pair = concat_pair(2, 2, basis=(F16.pow(g, 5), F16.pow(g, 11)))
        assert is_subcode(pair.c, pair.d) and pair.exact_distance >= 15


class TestTables:
    def test_examples(self):
        assert concatenated_rs_params(2, 2) == AqcParams(64, Fraction(3), 30, 2, dz_lower_bound=True)
        assert concatenated_rs_params(2, 16) == AqcParams(64, Fraction(31), 2, 2, dz_lower_bound=True)
        assert str(concatenated_rs_params(3, 1)) == "[[384,2,>=128/2]]_4"

    def test_alias(self):
        from skewaqc.rs_concat import theorem_7_3_params

        assert theorem_7_3_params is concatenated_rs_params

    def test_table2(self):
        rows = reproduce_table(2)
        assert [(r.k, r.k_prime, r.dz_floor) for r in rows] == [(k, *TABLE_GF16[k]) for k in range(1, 17)]
        assert rows[7].k_prime == 15 and rows[7].dz_floor == 18

    def test_table3(self):
        rows = reproduce_table(3)
        assert len(rows) == 64
        for r in rows:
            assert (r.k_prime, r.dz_floor) == TABLE_GF64[r.k]
            assert r.params == AqcParams(384, Fraction(3 * r.k - 1), 2 * (65 - r.k), 2, dz_lower_bound=True)
        assert (rows[32].k_prime, rows[32].dz_floor) == (98, 64)
        assert (rows[63].k_prime, rows[63].dz_floor) == (191, 2)

    def test_published_tables_follow_formula(self):
        for m, table in PUBLISHED_TABLES.items():
            q = 4**m
            for k, (kp, dz) in table.items():
                assert (kp, dz) == (m * k - 1, 2 * (q - k + 1))

    def test_text_layout(self):
        text = format_table(reproduce_table(2))
        lines = text.splitlines()
        assert lines[0].split() == ["k"] + [str(k) for k in range(1, 9)]
        assert lines[1].split()[1:] == ["1", "3", "5", "7", "9", "11", "13", "15"]
        assert lines[2].split()[2:] == ["32", "30", "28", "26", "24", "22", "20", "18"]
        assert len({len(line) for line in lines[:3]}) == 1

    def test_json(self):
        row = reproduce_table(1)[1].to_json()
        assert row["k"] == 2 and row["k_prime"] == 1 and row["dz_floor"] == 6
        assert row["params"]["dz_lower_bound"] is True and row["d_outer_exact"] == 3

    def test_m_out_of_range(self):
        with pytest.raises(ValueError):
            reproduce_table(4)


def test_evaluation_rows_have_designed_weight():
    f = ext_field(1)
    for k in range(1, 5):
        for coeffs in itertools.product(range(4), repeat=k):
            if not any(coeffs):
                continue
            word = [0] * 4
            for c, row in zip(coeffs, evaluation_generator(f, k)):
                word = [a ^ f.mul(c, b) for a, b in zip(word, row)]
            assert sum(1 for a in word if a) >= 5 - k
