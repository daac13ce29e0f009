import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard_varieties import (
    ONE,
    ZERO,
    CyclotomicNumber,
    complex_embedding,
    cyclotomic_polynomial,
    multiplicative_order,
    root_of_unity,
    root_of_unity_witness,
)
from hadamard_varieties.exactnum import euler_phi

from strategies import cyclotomics, unit_roots


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
        (15, (1, -1, 0, 1, -1, 1, 0, -1, 1)),
    ],
)
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


def test_cyclotomic_degree_is_phi():
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_cyclotomic_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_basic_identities():
    z6 = root_of_unity(6)
    assert z6 ** 3 == -1
    i = root_of_unity(4)
    assert (1 + i) * (1 - i) == 2
    z3 = root_of_unity(3)
    assert z3 + z3 ** 2 == -1
    assert root_of_unity(6, 2) == z3
    assert root_of_unity(1) == ONE


def test_conductor_is_minimal_after_canonicalization():
    c = root_of_unity(12, 4)
    assert c.canonical().conductor == 3
    assert (root_of_unity(8, 2)).canonical().conductor == 4
    assert CyclotomicNumber(12, [Fraction(1, 2)]).canonical().conductor == 1


def test_hash_consistent_across_conductors():
    a = root_of_unity(6, 2)
    b = root_of_unity(3, 1)
    assert a == b and hash(a) == hash(b)
    assert len({a, b, root_of_unity(12, 4)}) == 1


def test_inverse_and_division():
    c = 1 + root_of_unity(5)
    assert c * c.inverse() == 1
    assert (c / c).is_one()
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        c / 0


def test_negative_powers():
    z = root_of_unity(7)
    assert z ** -1 == z ** 6
    assert (2 * z) ** -2 == Fraction(1, 4) * z ** 5


@pytest.mark.parametrize(
    "value, order",
    [
        (root_of_unity(6, 2), 3),
        (root_of_unity(4, 1), 4),
        (-ONE, 2),
        (ONE, 1),
        (-root_of_unity(3), 6),
        (root_of_unity(12, 5), 12),
        (CyclotomicNumber(1, [2]), None),
        (1 + root_of_unity(4), None),
        # |.| = 1 but not a root of unity: (3 + 4i)/5
        ((3 + 4 * root_of_unity(4)) / 5, None),
    ],
)
def test_multiplicative_order(value, order):
    assert multiplicative_order(value) == order


def test_order_of_zero_is_an_error():
    with pytest.raises(ValueError):
        multiplicative_order(ZERO)


def test_witness():
    w = root_of_unity_witness(root_of_unity(12, 8))
    assert w.order == 3
    assert w.value == root_of_unity(12, 8)
    assert root_of_unity_witness(CyclotomicNumber(1, [3])) is None


def test_embedding():
    z = complex_embedding(root_of_unity(6))
    assert abs(z - cmath.exp(2j * cmath.pi / 6)) < 1e-14


def test_immutable():
    c = root_of_unity(5)
    with pytest.raises(AttributeError):
        c.conductor = 7


@settings(max_examples=150, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + ZERO == a and a * ONE == a


@settings(max_examples=150, deadline=None)
@given(cyclotomics(nonzero=True), cyclotomics())
def test_division_roundtrip(a, b):
    assert (b / a) * a == b
    assert a.inverse().inverse() == a


@settings(max_examples=100, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_embedding_is_a_homomorphism(a, b):
    assert abs(complex_embedding(a * b) - complex_embedding(a) * complex_embedding(b)) < 1e-9
    assert abs(complex_embedding(a + b) - complex_embedding(a) - complex_embedding(b)) < 1e-9


@settings(max_examples=100, deadline=None)
@given(unit_roots(), st.integers(1, 30))
def test_order_divides_and_is_minimal(z, k):
    d = multiplicative_order(z)
    assert z ** d == 1
    assert all(z ** j != 1 for j in range(1, d))
    assert multiplicative_order(z ** k) == d // math.gcd(d, k)
