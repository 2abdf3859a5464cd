from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from parafock import DomainError, RadicalNumber, squarefree_decompose


def sqrt(q, sign=1):
    return RadicalNumber.from_sqrt_rational(q, sign)


def test_perfect_square():
    assert sqrt(Fraction(9, 4)) == RadicalNumber.from_rational(Fraction(3, 2))


def test_squarefree_extraction():
    assert sqrt(8) == sqrt(2) * 2
    assert sqrt(12) == 2 * sqrt(3)


def test_zero_case():
    assert sqrt(0, -1).is_zero()
    assert sqrt(0) == RadicalNumber.zero()


def test_products_and_sums():
    assert sqrt(2) * sqrt(2) == 2
    assert sqrt(2) + sqrt(8) == 3 * sqrt(2)
    assert (sqrt(2) + 1) * (sqrt(2) - 1) == 1


def test_exact_comparison():
    assert (sqrt(2) - sqrt(2)).is_zero()
    assert 2 * sqrt(3) == sqrt(12)
    assert sqrt(2) != sqrt(3)


def test_negative_radicand_rejected():
    with pytest.raises(DomainError):
        sqrt(-1)


def test_json_round_trip():
    value = sqrt(2) * Fraction(3, 2) - sqrt(5) + Fraction(7, 3)
    assert RadicalNumber.from_json(value.to_json()) == value
    assert RadicalNumber.zero().to_json() == []


def test_as_fraction():
    assert sqrt(4).as_fraction() == 2
    with pytest.raises(DomainError):
        sqrt(2).as_fraction()


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(360) == (6, 10)
    big = 2 ** 4 * 53 ** 2 * 59
    assert squarefree_decompose(big) == (4 * 53, 59)


rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
radicals = st.builds(
    lambda q, d: RadicalNumber.from_rational(q) * RadicalNumber.from_sqrt_rational(d),
    rationals,
    st.integers(min_value=0, max_value=30),
)
values = st.builds(
    lambda parts: sum(parts, RadicalNumber.zero()),
    st.lists(radicals, min_size=0, max_size=3),
)


@given(values, values, values)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.fractions(min_value=0, max_value=50, max_denominator=20))
def test_sqrt_squares_back(q):
    for sign in (1, -1):
        root = RadicalNumber.from_sqrt_rational(q, sign)
        assert root * root == RadicalNumber.from_rational(q)


@given(values)
def test_canonical_idempotent(a):
    # rebuilding from the serialized canonical form is the identity
    assert RadicalNumber.from_json(a.to_json()) == a
    assert a - a == RadicalNumber.zero()


@given(values)
def test_float_is_consistent(a):
    approx = float(a)
    exact_terms = a.to_json()
    rebuilt = sum(n / d * (r ** 0.5) for r, n, d in exact_terms)
    assert abs(approx - rebuilt) < 1e-9
