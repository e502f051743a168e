from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from pairdist.errors import FieldMismatchError, InvalidCodeError
from pairdist.gf import PrimeField
from pairdist.poly import (
    FactorSpec,
    Polynomial,
    binom_mod,
    derivative,
    evaluate,
    expand,
    hasse_derivative,
    mul_mod_xn_minus_1,
    reduce_mod_xn_minus_1,
    weight_of_x_minus_1_pow,
)

F7 = PrimeField(7)


def P(*c, F=F7):
    return Polynomial(F, c)


def test_normalization_and_degree():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P().degree is None and P(0, 0).is_zero()
    assert P(8, -1).coeffs == (1, 6)
    assert P(0, 0, 3).degree == 2


def test_arithmetic():
    f, g = P(1, 1), P(6, 1)  # x + 1, x - 1
    assert f * g == P(6, 0, 1)
    assert f + g == P(0, 2)
    assert f - g == P(2)
    assert f**7 == P(1, 0, 0, 0, 0, 0, 0, 1)
    assert 3 * f == P(3, 3) and f * F7(2) == P(2, 2)


def test_mixed_fields():
    with pytest.raises(FieldMismatchError):
        P(1) + Polynomial(PrimeField(5), [1])


def test_render():
    assert P(3, 0, 5).render() == "3 + 5*x^2"
    assert P(0, 1).render() == "1*x"
    assert P().render() == "0"


def test_expand_and_evaluate():
    spec = FactorSpec.of(F7, [(1, 2), (2, 1)])
    g = expand(spec)
    assert g == P(6, 1) ** 2 * P(5, 1)
    assert evaluate(g, 1) == 0 and evaluate(g, 2) == 0 and evaluate(g, 3) != 0
    assert g(F7(4)) == evaluate(g, 4)


def test_factor_spec_validation():
    with pytest.raises(InvalidCodeError):
        FactorSpec.of(F7, [(1, 7)])
    with pytest.raises(InvalidCodeError):
        FactorSpec.of(F7, [(1, 1), (8, 2)])
    assert FactorSpec.of(F7, [(1, 3), (2, 0)]).degree == 3


def test_hasse_detects_multiplicity():
    f = P(6, 1) ** 3 * P(5, 1)
    assert [evaluate(hasse_derivative(f, j), 1).value == 0 for j in range(5)] == [True, True, True, False, False]


def test_hasse_vs_ordinary_in_characteristic_p():
    # 7! = 0 mod 7 kills the ordinary derivative; the Hasse one survives
    f = P(6, 1) ** 7
    assert hasse_derivative(f, 7) == P(1)
    assert derivative(f, 7) == P()


def test_lucas_weights_mod_7():
    assert [weight_of_x_minus_1_pow(t, F7) for t in range(8)] == [1, 2, 3, 4, 5, 6, 7, 2]
    assert weight_of_x_minus_1_pow(13, F7) == 2 * 7


def test_cyclic_reduction():
    f = P(1, 0, 0, 1, 2)
    assert reduce_mod_xn_minus_1(f, 3) == P(2, 2)
    assert mul_mod_xn_minus_1(P(0, 0, 1), P(0, 1), 3) == P(1)


@settings(max_examples=2000, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(0, 400), st.integers(0, 400))
def test_binom_mod_matches_integer_binomial(p, n, k):
    assert binom_mod(n, k, p) == comb(n, k) % p if k <= n else binom_mod(n, k, p) == 0


coeff_lists = st.lists(st.integers(0, 12), max_size=10)


@settings(max_examples=500, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists, st.integers(0, 12))
def test_ring_laws(a, b, c, x):
    F = PrimeField(13)
    f, g, h = Polynomial(F, a), Polynomial(F, b), Polynomial(F, c)
    assert f * (g + h) == f * g + f * h
    assert evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x)
    assert evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x)


@settings(max_examples=500, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(1, 9))
def test_cyclic_product_matches_reduction(a, b, n):
    F = PrimeField(13)
    f, g = Polynomial(F, a), Polynomial(F, b)
    assert mul_mod_xn_minus_1(f, g, n) == reduce_mod_xn_minus_1(f * g, n)
