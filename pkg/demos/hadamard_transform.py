"""Translating a hypersurface by a point.

Dividing each coefficient a_I of f by P^I gives f^P, whose zero set is the
coordinatewise product P * Z(f).  Transforming by P and then by 1/P is the
identity, and a Groebner basis is carried to a Groebner basis.
"""

from hadamard_varieties import (
    GREVLEX,
    IdealPresentation,
    ProjectivePoint,
    TransformDomainError,
    buchberger,
    hadamard_transform,
    invert_point,
    is_groebner_basis,
    parse_poly,
    star_point,
    transform_ideal,
)

conic = parse_poly("x0*x2 - x1^2", 3)

# [1:2:4] lies on the conic, and the conic is closed under products of its points
P = ProjectivePoint.of(1, 2, 4)
print("f^P for P on the conic:", hadamard_transform(conic, P).monic())

Q = ProjectivePoint.of(1, 1, 3)
g = hadamard_transform(conic, Q)
print("f^Q for Q = [1:1:3]:  ", g)
print("back again:           ", hadamard_transform(g, invert_point(Q)))

# f^Q vanishes at Q * R exactly when f vanishes at R
R = ProjectivePoint.of(1, 3, 9)
print("f(R) =", conic.evaluate(R.coords), " f^Q(Q*R) =", g.evaluate(star_point(Q, R).coords))

# zero coordinates are fine as long as the support avoids them
line = parse_poly("x0 - x1", 3)
print("line at [1:2:0]:", hadamard_transform(line, ProjectivePoint.of(1, 2, 0)))
try:
    hadamard_transform(conic, ProjectivePoint.of(1, 2, 0))
except TransformDomainError as e:
    print("conic at [1:2:0]: refused, variable", f"x{e.variable}")

twisted = [parse_poly(s, 4) for s in ("x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")]
G = buchberger(twisted, GREVLEX)
T = transform_ideal(IdealPresentation(tuple(G), GREVLEX, is_groebner=True), ProjectivePoint.of(1, 2, 3, 5))
print("transformed twisted cubic basis:")
for h in T.generators:
    print("  ", h)
print("still a Groebner basis:", is_groebner_basis(list(T.generators), GREVLEX))
