from __future__ import annotations

from math import comb

import pytest
from hypothesis import given

import oracles
from conftest import additive_codes
from skewaqc.codes import (
    AdditiveCodeF4,
    WeightEnumerator,
    repetition_code,
    trace_dual,
    weight_enumerator,
)
from skewaqc.smap import s_apply_code
from skewaqc.wenum import (
    DualWeightData,
    InconsistentEnumerator,
    dual_s_image_wenum,
    krawtchouk,
    l_polynomial,
    macwilliams_transform,
    pless_moment_check,
    s_image_wenum,
)


def WE(*coeffs):
    return WeightEnumerator(tuple(coeffs))


def _poly_coeffs(n, i):
    """(X + 3Y)^(n-i) (X - Y)^i expanded by brute force over all 4^n words.

    Coefficient of Y^j counts signed words: this is the character sum that
    the Krawtchouk numbers compress.
    """
    out = [0] * (n + 1)
    for j in range(n + 1):
        out[j] = sum(
            (-1) ** s * 3 ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(min(i, j) + 1)
        )
    return out


class TestMacWilliams:
    def test_examples(self):
        assert macwilliams_transform(WE(1, 0, 3)) == WE(1, 0, 3)
        for n in range(1, 6):
            zero = WE(1, *([0] * n))
            assert list(macwilliams_transform(zero).coeffs) == [comb(n, i) * 3**i for i in range(n + 1)]

    def test_krawtchouk_generating_function(self):
        # sum_j K_j(i) = (1 + 3)^(n-i) (1 - 1)^i
        for n in range(1, 8):
            for i in range(n + 1):
                assert sum(krawtchouk(j, i, n) for j in range(n + 1)) == (4 ** n if i == 0 else 0)
                assert [krawtchouk(j, i, n) for j in range(n + 1)] == _poly_coeffs(n, i)

    def test_fixture(self, eqn4):
        w = weight_enumerator(eqn4)
        assert macwilliams_transform(w) == weight_enumerator(trace_dual(eqn4))

    @given(additive_codes(n_max=6))
    def test_matches_dual_enumeration(self, code):
        w = weight_enumerator(code)
        assert macwilliams_transform(w, code.size) == weight_enumerator(trace_dual(code))

    @given(additive_codes(n_max=6))
    def test_matches_brute_force_dual(self, code):
        if code.n > 4:
            return
        words = oracles.additive_span(code.n, code.generators)
        dual = oracles.trace_dual_set(code.n, words)
        assert list(macwilliams_transform(weight_enumerator(code)).coeffs) == oracles.weight_counts(code.n, dual)

    @given(additive_codes(n_max=7))
    def test_involution(self, code):
        w = weight_enumerator(code)
        dual = macwilliams_transform(w)
        assert macwilliams_transform(dual, 4**code.n // code.size) == w

    def test_inconsistent_input(self):
        with pytest.raises(InconsistentEnumerator):
            macwilliams_transform(WE(1, 2))  # size 3 is not a power of 2
        with pytest.raises(InconsistentEnumerator):
            macwilliams_transform(WE(1, 0, 3), size=5)


class TestSImage:
    def test_examples(self, eqn4):
        assert s_image_wenum(WE(1, 0, 3)) == WE(1, 0, 0, 0, 3)
        assert s_image_wenum(WE(1, 0, 0)) == WE(1, 0, 0, 0, 0)
        assert s_image_wenum(weight_enumerator(eqn4)) == weight_enumerator(s_apply_code(eqn4))

    def test_l_polynomial(self):
        # L_i at Y = 1 is 4^(2(n-i)) * 0^(2i)
        for n in range(1, 6):
            for i in range(n + 1):
                assert sum(l_polynomial(i, n)) == (16**n if i == 0 else 0)

    @given(additive_codes(n_max=6))
    def test_dual_of_image_matches_enumeration(self, code):
        w = weight_enumerator(code)
        data = dual_s_image_wenum(w)
        expect = weight_enumerator(trace_dual(s_apply_code(code)))
        assert data.as_enumerator() == expect
        assert data.as_enumerator() == macwilliams_transform(s_image_wenum(w))
        assert data[0] == 1
        assert sum(data.coeffs) == 16**code.n // code.size

    @given(additive_codes(n_max=6))
    def test_b_coefficient_analysis(self, code):
        dual_w = weight_enumerator(trace_dual(code))
        data = dual_s_image_wenum(weight_enumerator(code))
        n = code.n
        d_dual = dual_w.min_distance
        if d_dual is None:
            return
        if d_dual == 1:
            assert data[1] == 2 * dual_w[1] > 0
        else:
            assert data[1] == 0
            assert data[2] == 3 * n + 4 * dual_w[2]
            if d_dual >= 3:
                assert data[2] == 3 * n

    def test_repetition_b2(self):
        for n in range(2, 7):
            rep = repetition_code(n)
            a2 = weight_enumerator(trace_dual(rep))[2]
            data = dual_s_image_wenum(weight_enumerator(rep))
            assert (data[0], data[1], data[2]) == (1, 0, 3 * n + 4 * a2)

    def test_dual_weight_data_validation(self):
        with pytest.raises(InconsistentEnumerator):
            DualWeightData((2, 0, 0), 16)
        with pytest.raises(InconsistentEnumerator):
            DualWeightData((1, 0, 2), 16)


class TestPless:
    def test_repetition_forces_a1_zero(self):
        for n in range(1, 8):
            w = weight_enumerator(repetition_code(n))
            assert sum(i * a for i, a in enumerate(w.coeffs)) == 3 * n
            assert pless_moment_check(w, 4, n, 0, weight_enumerator(trace_dual(repetition_code(n)))[2])
            assert not pless_moment_check(w, 4, n, 1, 0)

    def test_full_space(self):
        for n in range(1, 5):
            full = AdditiveCodeF4.full(n)
            assert pless_moment_check(weight_enumerator(full), 4**n, n, 0, 0)

    def test_fixture(self, eqn4):
        w = weight_enumerator(eqn4)
        dual = weight_enumerator(trace_dual(eqn4))
        assert pless_moment_check(w, 16, 4, dual[1], dual[2])

    def test_reports_failing_moment(self):
        check = pless_moment_check(WE(1, 0, 3), 4, 2, 0, 5)
        assert not check and any("moment 2" in f for f in check.failed)

    @given(additive_codes(n_max=7))
    def test_random_codes(self, code):
        dual = weight_enumerator(trace_dual(code))
        assert pless_moment_check(weight_enumerator(code), code.size, code.n, dual[1], dual[2])
