"""Projective points, Hadamard products of points, and the Hadamard transformation.

For a homogeneous ``f = sum a_I X^I`` and a point ``P`` the transformation
is ``f^P = sum (a_I / P^I) X^I``.  It carries the ideal of ``V`` to the
ideal of ``P * V``, and a Groebner basis to a Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .exactnum import ONE, CyclotomicNumber, Scalar, as_cyclotomic
from .groebner import IdealPresentation
from .multipoly import LEX, MonomialOrder, MultiPoly


class DeltaStratumError(ValueError):
    """A point has a zero coordinate where a nonzero one is required."""


class TransformDomainError(ValueError):
    """A support monomial of ``f`` vanishes at the transforming point."""

    def __init__(self, message: str, variable: int):
        super().__init__(message)
        self.variable = variable


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A point of P^n given by a representative coordinate vector."""

    coords: Tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        coords = tuple(as_cyclotomic(c) for c in self.coords)
        if not coords:
            raise ValueError("a projective point needs at least one coordinate")
        if all(c.is_zero() for c in coords):
            raise ValueError("[0:...:0] is not a projective point")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: Scalar) -> "ProjectivePoint":
        return cls(tuple(coords))

    @classmethod
    def ones(cls, arity: int) -> "ProjectivePoint":
        return cls((ONE,) * arity)

    @property
    def arity(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def zero_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c.is_zero())

    def normalized(self) -> "ProjectivePoint":
        """Representative whose first nonzero coordinate is 1."""
        lead = next(c for c in self.coords if not c.is_zero())
        inv = lead.inverse()
        return ProjectivePoint(tuple(c * inv for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if self.arity != other.arity:
            return False
        a, b = self.coords, other.coords
        n = len(a)
        # [a] == [b] iff every 2x2 minor a_i b_j - a_j b_i vanishes
        for i in range(n):
            if a[i].is_zero() != b[i].is_zero():
                return False
        for i in range(n):
            for j in range(i + 1, n):
                if not (a[i] * b[j] - a[j] * b[i]).is_zero():
                    return False
        return True

    def __hash__(self):
        return hash(self.normalized().coords)

    def __str__(self):
        from .parsing import format_point

        return format_point(self.coords)

    def __repr__(self):
        return f"ProjectivePoint({self})"


def star_point(p: ProjectivePoint, q: ProjectivePoint) -> Optional[ProjectivePoint]:
    """Coordinatewise product ``p * q``, or None when every product vanishes."""
    if p.arity != q.arity:
        raise ValueError("points live in different projective spaces")
    prod = tuple(a * b for a, b in zip(p.coords, q.coords))
    if all(c.is_zero() for c in prod):
        return None
    return ProjectivePoint(prod)


def delta_level(p: ProjectivePoint) -> int:
    """Smallest ``i`` with ``p`` in Delta_i, i.e. (number of nonzero coordinates) - 1."""
    return sum(1 for c in p.coords if not c.is_zero()) - 1


def invert_point(p: ProjectivePoint) -> ProjectivePoint:
    """The point ``1/P``; all coordinates must be nonzero."""
    zeros = p.zero_indices()
    if zeros:
        raise DeltaStratumError(
            f"cannot invert {p}: coordinate x{zeros[0]} is zero (point lies in Delta_{p.arity - 2})"
        )
    return ProjectivePoint(tuple(c.inverse() for c in p.coords))


def quotient_point(q: ProjectivePoint, p: ProjectivePoint) -> Tuple[Optional[ProjectivePoint], int]:
    """``Q / P = Q * (1/P)`` together with the Delta level of the result.

    The level is reported rather than interpreted: a result with extra zero
    coordinates is legal but lies on a smaller stratum.  A ``None`` point
    comes with level ``-1``.
    """
    r = star_point(q, invert_point(p))
    return r, (delta_level(r) if r is not None else -1)


def points_equal(p: ProjectivePoint, q: ProjectivePoint) -> bool:
    return p == q


def _monomial_value(coords: Sequence[CyclotomicNumber], e) -> CyclotomicNumber:
    v = ONE
    for c, k in zip(coords, e):
        if k:
            v = v * c ** k
    return v


def hadamard_transform(f: MultiPoly, p: ProjectivePoint) -> MultiPoly:
    """Return ``sum (a_I / P^I) X^I``.

    ``P`` may have zero coordinates as long as no variable of ``f`` sits
    there; otherwise a :class:`TransformDomainError` names the variable.
    """
    if f.arity != p.arity:
        raise ValueError(f"polynomial in {f.arity} variables, point with {p.arity} coordinates")
    if not f.is_zero() and f.is_homogeneous() is None:
        raise ValueError("the Hadamard transformation needs a homogeneous polynomial")
    zeros = set(p.zero_indices())
    for i in f.variables():
        if i in zeros:
            raise TransformDomainError(
                f"x{i} appears in the support but the point {p} has x{i} = 0", i
            )
    inv = tuple(c.inverse() if not c.is_zero() else c for c in p.coords)
    return MultiPoly._from_clean(f.arity, {e: a * _monomial_value(inv, e) for e, a in f.terms.items()})


def transform_ideal(I: IdealPresentation, p: ProjectivePoint, normalize: bool = True) -> IdealPresentation:
    """Transform every generator by ``p``; a Groebner basis stays a Groebner basis.

    With ``normalize`` each transformed generator is made monic under
    ``I.order``.
    """
    gens = []
    for g in I.generators:
        h = hadamard_transform(g, p)
        gens.append(h.monic(I.order) if normalize and h else h)
    return IdealPresentation(tuple(gens), I.order, is_groebner=I.is_groebner)


def transform_monic(f: MultiPoly, p: ProjectivePoint, order: MonomialOrder = LEX) -> MultiPoly:
    """Transformation followed by monic rescaling, the usual display form."""
    return hadamard_transform(f, p).monic(order)
