import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard_varieties import (
    GREVLEX,
    LEX,
    DeltaStratumError,
    IdealPresentation,
    ProjectivePoint,
    TransformDomainError,
    buchberger,
    delta_level,
    hadamard_transform,
    ideal_equal,
    invert_point,
    is_groebner_basis,
    parse_poly,
    quotient_point,
    star_point,
    transform_ideal,
)
from hadamard_varieties.core import transform_monic

from strategies import homogeneous_polys, nonzero_points

P = ProjectivePoint.of


def test_projective_equality():
    assert P(1, 2, 4) == P(2, 4, 8)
    assert P(1, 2, 4) != P(1, 2, 5)
    assert P(0, 1) != P(1, 0)
    assert hash(P(1, 2, 4)) == hash(P(3, 6, 12))
    assert str(P(2, 4, 8).normalized()) == "[1:2:4]"


def test_rejects_zero_vector():
    with pytest.raises(ValueError):
        P(0, 0, 0)


def test_star_point():
    assert star_point(P(1, 2, 3), P(4, 5, 6)) == P(4, 10, 18)
    assert star_point(P(1, 0, 3), P(0, 5, 0)) is None
    assert star_point(P(1, 0, 3), P(1, 5, 0)) == P(1, 0, 0)


def test_delta_levels():
    assert delta_level(P(1, 0, 0)) == 0
    assert delta_level(P(1, 0, 3)) == 1
    assert delta_level(P(1, 2, 3)) == 2


def test_invert_and_quotient():
    assert invert_point(P(1, 2, 4)) == P(4, 2, 1)
    with pytest.raises(DeltaStratumError):
        invert_point(P(1, 0, 4))
    q, level = quotient_point(P(1, 0, 2), P(1, 1, 2))
    assert q == P(1, 0, 1) and level == 1


def test_transform_example():
    f = parse_poly("x0*x2 - x1^2", 3)
    assert transform_monic(f, P(1, 2, 4)) == f
    g = hadamard_transform(f, P(1, 1, 2))
    assert g == parse_poly("1/2*x0*x2 - x1^2", 3)


def test_transform_domain_uses_support_only():
    f = parse_poly("x0 - x1", 3)
    # x2 does not occur in f, so a zero there is harmless
    assert hadamard_transform(f, P(1, 2, 0)) == parse_poly("x0 - 1/2*x1", 3)
    with pytest.raises(TransformDomainError) as info:
        hadamard_transform(f, P(0, 2, 1))
    assert info.value.variable == 0


def test_transform_needs_homogeneous_input():
    with pytest.raises(ValueError):
        hadamard_transform(parse_poly("x0 - x1^2", 2), P(1, 1))


def test_transform_ideal_keeps_groebner_flag():
    I = IdealPresentation((parse_poly("x0 - x1", 2),), LEX, is_groebner=True)
    J = transform_ideal(I, P(1, 3))
    assert J.is_groebner
    assert J.generators == (parse_poly("x0 - 1/3*x1", 2),)


points3 = nonzero_points(3)
polys3 = homogeneous_polys(arity=3)


@settings(max_examples=60, deadline=None)
@given(polys3, points3)
def test_transform_inverts(f, p):
    assert hadamard_transform(hadamard_transform(f, p), invert_point(p)) == f
    assert hadamard_transform(hadamard_transform(f, invert_point(p)), p) == f


@settings(max_examples=60, deadline=None)
@given(polys3, points3, points3)
def test_transforms_compose(f, p, q):
    assert hadamard_transform(hadamard_transform(f, p), q) == hadamard_transform(f, star_point(p, q))


@settings(max_examples=60, deadline=None)
@given(polys3, points3, points3)
def test_transform_vanishes_on_translated_points(f, p, q):
    # f^P(P * Q) = f(Q) on representatives, so Z(f^P) = P * Z(f)
    pq = star_point(p, q)
    assert hadamard_transform(f, p).evaluate(pq.coords) == f.evaluate(q.coords)


@settings(max_examples=25, deadline=None)
@given(st.lists(homogeneous_polys(arity=3, max_degree=2, max_terms=3), min_size=1, max_size=3), points3,
       st.sampled_from([LEX, GREVLEX]))
def test_groebner_bases_transfer(gens, p, order):
    G = buchberger(gens, order)
    T = transform_ideal(IdealPresentation(tuple(G), order, is_groebner=True), p)
    assert is_groebner_basis(list(T.generators), order)
    direct = IdealPresentation(tuple(hadamard_transform(g, p) for g in gens), order)
    assert ideal_equal(T, direct)
    assert set(T.reduced_basis()) == set(T.generators)
