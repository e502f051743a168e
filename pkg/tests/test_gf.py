import pytest
from hypothesis import given, settings, strategies as st

from pairdist.errors import FieldMismatchError, InvalidFieldError
from pairdist.gf import PrimeField, arith, inv, is_prime, order, primitive_root, root_of_unity

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]


def test_is_prime_small():
    assert [n for n in range(50) if is_prime(n)] == [2] + PRIMES + [47]


@pytest.mark.parametrize("bad", [0, 1, 2, 4, 9, 15, 21, 1001])
def test_field_rejects_non_odd_primes(bad):
    with pytest.raises(InvalidFieldError):
        PrimeField(bad)


def test_element_arithmetic():
    F = PrimeField(7)
    a, b = F(3), F(5)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert a / b == 2
    assert -a == 4
    assert a**6 == 1
    assert a ** -1 == b
    assert 2 * a == 6 and a + 10 == 6


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        inv(PrimeField(5)(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)
    with pytest.raises(FieldMismatchError):
        arith(PrimeField(5)(1), PrimeField(7)(1), "mul")


def test_arith_ops():
    F = PrimeField(11)
    assert arith(F(4), F(9), "add") == 2
    assert arith(F(4), F(9), "sub") == 6
    assert arith(F(4), F(9), "mul") == 3
    with pytest.raises(ValueError):
        arith(F(1), F(1), "div")


def test_orders_mod_7():
    F = PrimeField(7)
    assert [order(F(v)) for v in range(1, 7)] == [1, 3, 6, 3, 6, 2]


def test_primitive_roots():
    assert {p: primitive_root(PrimeField(p)).value for p in (3, 5, 7, 11, 13)} == {3: 2, 5: 2, 7: 3, 11: 2, 13: 2}


def test_root_of_unity():
    F = PrimeField(7)
    assert root_of_unity(F, 3) == 2
    assert root_of_unity(F, 6) == 3
    assert root_of_unity(PrimeField(13), 3) == 3
    assert root_of_unity(PrimeField(5), 4) == 2
    with pytest.raises(InvalidFieldError):
        root_of_unity(F, 4)


@settings(max_examples=500, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, x, y, z):
    F = PrimeField(p)
    a, b, c = F(x), F(y), F(z)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
        assert a ** (p - 1) == 1
        assert (p - 1) % order(a) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_root_of_unity_has_exact_order(p, data):
    F = PrimeField(p)
    divs = [d for d in range(1, p) if (p - 1) % d == 0]
    l = data.draw(st.sampled_from(divs))
    w = root_of_unity(F, l)
    assert order(w) == l
    assert order(primitive_root(F)) == p - 1
