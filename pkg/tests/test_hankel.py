from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classicalseq import (DELTA, HERMITE, LEGENDRE, CholeskyState, DimensionMismatch,
                          MomentSequence, QuasiDefiniteViolation, TooShort, bareiss_determinant,
                          bilinear, build_gram, cholesky_extend, cholesky_init, det_ratio_check,
                          factorize, generate_moments, verify_factorization)
from conftest import CLASSICAL, moments_for, state_for
from oracles import cofactor_det, dense_ldlt, gauss_det, hankel, inverse_unit_lower, mat_T

LEG = generate_moments(LEGENDRE, 2, 6)
HER = generate_moments(HERMITE, 1, 6)


class TestBuildGram:
    def test_hermite(self):
        assert build_gram(HER, 1).rows() == [[1, 0], [0, F(1, 2)]]

    def test_legendre(self):
        assert build_gram(LEG, 2).rows() == [[2, 0, F(2, 3)], [0, F(2, 3), 0], [F(2, 3), 0, F(2, 5)]]

    def test_symmetric(self):
        g = build_gram(LEG, 5)
        assert all(g.entry(i, j) == g.entry(j, i) for i in range(6) for j in range(6))

    def test_too_short(self):
        with pytest.raises(TooShort):
            build_gram(MomentSequence((1, 0, 1)), 2)

    def test_level_carried(self):
        from classicalseq import derive_sigma
        assert build_gram(derive_sigma(LEG), 1).level == 1


class TestBilinear:
    def test_e0(self):
        assert bilinear(build_gram(LEG, 2), [1, 0, 0], [1, 0, 0]) == 2

    def test_p2_norm(self):
        # int_{-1}^{1} (x^2 - 1/3)^2 dx
        u = [F(-1, 3), 0, 1]
        assert bilinear(build_gram(LEG, 2), u, u) == F(8, 45)

    def test_symmetric(self):
        g = build_gram(LEG, 2)
        u, v = [1, F(2, 3), -5], [F(1, 7), 3, 2]
        assert bilinear(g, u, v) == bilinear(g, v, u)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            bilinear(build_gram(LEG, 2), [1, 0], [1, 0, 0])


class TestCholesky:
    def test_init(self):
        assert cholesky_init(build_gram(LEG, 0)).h == (2,)
        assert cholesky_init(build_gram(HER, 0)).h == (1,)

    def test_init_zero(self):
        with pytest.raises(QuasiDefiniteViolation) as exc:
            cholesky_init(build_gram(MomentSequence((0, 1, 1)), 0))
        assert exc.value.order == 0

    def test_legendre_steps(self):
        st1 = cholesky_extend(cholesky_init(LEG), LEG)
        assert st1.column(1) == [0, 1]
        assert st1.h[1] == F(2, 3)
        st2 = cholesky_extend(st1, LEG)
        assert st2.column(2) == [F(-1, 3), 0, 1]
        assert st2.h[2] == F(8, 45)

    def test_delta(self):
        m = generate_moments(DELTA, 1, 2)
        with pytest.raises(QuasiDefiniteViolation) as exc:
            cholesky_extend(cholesky_init(m), m)
        assert exc.value.order == 1

    def test_needs_moments(self):
        with pytest.raises(TooShort):
            cholesky_extend(cholesky_init(LEG), LEG.values[:2])

    def test_bordering_is_stable(self):
        big = factorize(LEG, 6)
        for m in range(7):
            small = factorize(LEG, m)
            for j in range(m + 1):
                assert small.columns[j] == big.columns[j]
                assert small.h[j] == big.h[j]
            assert big.truncate(m) == small

    def test_immutable(self):
        st = factorize(LEG, 2)
        with pytest.raises(Exception):
            st.h = ()
        assert isinstance(st, CholeskyState)

    def test_new_column_orthogonal_to_canonical(self):
        st = factorize(LEG, 5)
        for n in range(5):
            g = build_gram(LEG, n + 1)
            s = st.column(n + 1, n + 2)
            for i in range(n + 1):
                e = [0] * (n + 2)
                e[i] = 1
                assert bilinear(g, s, e) == 0


class TestVerifyFactorization:
    def test_legendre(self):
        assert verify_factorization(factorize(LEG, 2), build_gram(LEG, 2))

    def test_corrupted_h(self):
        st = factorize(LEG, 2)
        bad = CholeskyState(st.columns, st.h[:2] + (F(1, 2),))
        assert not verify_factorization(bad, build_gram(LEG, 2))

    def test_hermite(self):
        st = factorize(HER, 3)
        assert verify_factorization(st, build_gram(HER, 3))
        assert st.h == (1, F(1, 2), F(1, 2), F(3, 4))

    def test_order_mismatch(self):
        with pytest.raises(DimensionMismatch):
            verify_factorization(factorize(LEG, 2), build_gram(LEG, 3))


class TestDeterminants:
    def test_legendre_chain(self):
        dets = [gauss_det(hankel(LEG, j)) for j in range(3)]
        assert dets == [2, F(4, 3), F(32, 135)]
        assert det_ratio_check(factorize(LEG, 2), LEG)

    def test_hermite_chain(self):
        assert [cofactor_det(hankel(HER, j)) for j in range(3)] == [1, F(1, 2), F(1, 4)]
        assert det_ratio_check(factorize(HER, 2), HER)

    def test_detects_wrong_h(self):
        st = factorize(HER, 2)
        assert not det_ratio_check(CholeskyState(st.columns, (1, 1, F(1, 2))), HER)

    @pytest.mark.parametrize("rows", [
        [[0, 1], [1, 0]],
        [[F(1, 2), F(1, 3), 0], [2, 0, F(5, 7)], [0, 0, 0]],
        [[0, 0, 1], [0, 2, 3], [4, 5, 6]],
        [[F(2, 3), F(-1, 5), 4, 1], [1, 0, 0, F(3, 2)], [0, 7, 1, 1], [F(1, 9), 2, 0, 5]],
    ])
    def test_bareiss_vs_cofactor(self, rows):
        assert bareiss_determinant(rows) == cofactor_det(rows)

    def test_bareiss_empty(self):
        assert bareiss_determinant([]) == 1


@pytest.mark.parametrize("name", CLASSICAL)
def test_fixture_factorization_vs_dense_ldlt(name):
    m = moments_for(name, 12)
    st = factorize(m, 12)
    L, D = dense_ldlt(hankel(m, 12))
    # S^{-1} = L  <=>  S^T = L^{-T}
    assert st.upper() == mat_T(inverse_unit_lower(L))
    assert list(st.h) == D


def test_positive_definite_fixtures():
    for name in ("hermite", "laguerre", "legendre"):
        assert all(h > 0 for h in state_for(name, 10).h)
    assert all(h != 0 for h in state_for("bessel", 10).h)


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=13, max_size=13), st.integers(1, 6))
def test_arbitrary_sequence_factorization(vals, n):
    """Bordering works for any quasi-definite Hankel matrix, classical or not."""
    vals[0] = vals[0] or F(1)
    try:
        st_ = factorize(vals, n)
    except QuasiDefiniteViolation as exc:
        assert gauss_det(hankel(vals, exc.order)) == 0
        return
    assert verify_factorization(st_, build_gram(vals, n))
    assert det_ratio_check(st_, vals)
