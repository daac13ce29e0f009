import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard_varieties import GREVLEX, GRLEX, LEX, MonomialOrder, MultiPoly, RingError, make_order, root_of_unity
from hadamard_varieties.multipoly import evaluate, is_homogeneous, leading_term, monomial_gcd_coprime

from strategies import cyclotomics, homogeneous_polys

x = [MultiPoly.var(3, i) for i in range(3)]


def test_orders_on_textbook_monomials():
    a, b = (1, 2, 0), (0, 0, 3)
    # lex compares x0 first; grevlex breaks degree ties from the last variable
    assert LEX.key(a) > LEX.key(b)
    assert GRLEX.key(b) == GRLEX.key(b)
    assert GREVLEX.key((1, 0, 1)) < GREVLEX.key((0, 2, 0))
    assert LEX.key((1, 0, 1)) > LEX.key((0, 2, 0))
    assert GRLEX.key((1, 0, 1)) > GRLEX.key((0, 2, 0))


def test_make_order_aliases():
    assert make_order("deglex") == GRLEX
    assert make_order("lex") == LEX
    with pytest.raises(ValueError):
        make_order("weird")


def test_block_order_is_elimination():
    o = MonomialOrder("block", (2, 0, 1), block=1)
    assert o.is_elimination_for([2], 3)
    assert not o.is_elimination_for([0], 3)
    assert not LEX.is_elimination_for([1], 3)
    assert LEX.is_elimination_for([0], 3)


def test_arithmetic():
    f = x[0] * x[2] - x[1] ** 2
    assert f.degree() == 2
    assert f.is_homogeneous() == 2
    assert (f - f).is_zero()
    assert (x[0] + x[1]) ** 2 == x[0] ** 2 + 2 * x[0] * x[1] + x[1] ** 2
    assert f.variables() == [0, 1, 2]
    assert len(f) == 2


def test_leading_terms_depend_on_order():
    f = x[0] * x[2] - 2 * x[1] ** 2
    assert leading_term(f, LEX) == ((1, 0, 1), 1)
    assert leading_term(f, GREVLEX) == ((0, 2, 0), -2)
    with pytest.raises(ValueError):
        MultiPoly.zero(3).leading_term()


def test_homogeneity():
    assert is_homogeneous(x[0] + x[1] ** 2) is None
    assert is_homogeneous(MultiPoly.zero(3)) is None
    assert is_homogeneous(MultiPoly.constant(3, 5)) == 0


def test_evaluate():
    f = x[0] * x[2] - root_of_unity(4) * x[1] ** 2
    assert evaluate(f, [1, 1, 1]) == 1 - root_of_unity(4)
    with pytest.raises(RingError):
        f.evaluate([1, 2])


def test_arity_mismatch():
    with pytest.raises(RingError):
        x[0] + MultiPoly.var(2, 0)


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 0, 1), (0, 2, 0), True), ((1, 1, 0), (0, 1, 1), False), ((0, 0, 0), (1, 0, 0), True)],
)
def test_coprime(a, b, expected):
    assert monomial_gcd_coprime(a, b) is expected


def test_monic_and_rename():
    f = 3 * x[0] * x[1] - 6 * x[2] ** 2
    assert f.monic(LEX).leading_coefficient(LEX) == 1
    g = f.rename(4, [1, 2, 3])
    assert g.arity == 4 and g.variables() == [1, 2, 3]


polys = homogeneous_polys(arity=3, max_degree=2)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == MultiPoly.zero(3)


@settings(max_examples=80, deadline=None)
@given(polys, polys, st.lists(cyclotomics(conductors=[1, 4]), min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_products_of_homogeneous_are_homogeneous(f, g):
    assert (f * g).is_homogeneous() == f.is_homogeneous() + g.is_homogeneous()
