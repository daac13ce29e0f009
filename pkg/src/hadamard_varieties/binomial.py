"""Binomial hypersurfaces and their Hadamard products and powers.

A binomial hypersurface is ``Z(a1 X^I1 - a2 X^I2)`` with coprime ``I1``,
``I2``.  Two binomials on the same exponent pair multiply coefficientwise::

    Z(a1 X^I1 - a2 X^I2) * Z(b1 X^I1 - b2 X^I2) = Z(a1 b1 X^I1 - a2 b2 X^I2)

so everything about powers reduces to the ratio ``a2 / a1``.  A binomial is
of type ``(t, eps)`` when that ratio is ``xi^eps`` for a primitive
``(t-1)``-th root of unity ``xi``; then ``C^{*t} = C``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .exactnum import (
    ONE,
    CyclotomicNumber,
    Scalar,
    as_cyclotomic,
    multiplicative_order,
    root_of_unity,
    root_of_unity_witness,
)
from .groebner import IdealPresentation, ideal_equal
from .multipoly import GREVLEX, LEX, Exponent, MultiPoly, monomial_gcd_coprime

# brute-force idempotency checks only run below these sizes
BRUTE_FORCE_MAX_EXPONENT = 64
BRUTE_FORCE_MAX_ARITY = 8


class NonHypersurfaceError(ValueError):
    """A Hadamard product of the given components is not a hypersurface."""


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class BinomialForm:
    """Normalized binomial ``alpha1 X^I1 - alpha2 X^I2``.

    Use :meth:`make` to build one from arbitrary data: it orients the pair
    so that ``X^I1 > X^I2`` in lex order and scales to ``alpha1 = 1``.
    """

    I1: Exponent
    I2: Exponent
    alpha1: CyclotomicNumber
    alpha2: CyclotomicNumber

    def __post_init__(self):
        object.__setattr__(self, "I1", tuple(self.I1))
        object.__setattr__(self, "I2", tuple(self.I2))
        object.__setattr__(self, "alpha1", as_cyclotomic(self.alpha1))
        object.__setattr__(self, "alpha2", as_cyclotomic(self.alpha2))
        if len(self.I1) != len(self.I2):
            raise ValueError("exponent vectors of different length")
        if self.alpha1.is_zero() or self.alpha2.is_zero():
            raise ValueError("binomial coefficients must be nonzero")
        if self.I1 == self.I2:
            raise ValueError("binomial needs two distinct monomials")
        if not monomial_gcd_coprime(self.I1, self.I2):
            raise ValueError(f"exponent vectors {self.I1} and {self.I2} are not coprime")
        if sum(self.I1) != sum(self.I2) or sum(self.I1) == 0:
            raise ValueError("binomial must be homogeneous of positive degree")

    @classmethod
    def make(cls, I1: Sequence[int], I2: Sequence[int], alpha1: Scalar = 1, alpha2: Scalar = 1) -> "BinomialForm":
        I1, I2 = tuple(I1), tuple(I2)
        a1, a2 = as_cyclotomic(alpha1), as_cyclotomic(alpha2)
        if LEX.key(I2) > LEX.key(I1):
            # a1 X^I1 - a2 X^I2 and a2 X^I2 - a1 X^I1 cut out the same set
            I1, I2, a1, a2 = I2, I1, a2, a1
        return cls(I1, I2, ONE, a2 / a1)

    @classmethod
    def with_ratio(cls, I1: Sequence[int], I2: Sequence[int], ratio: Scalar) -> "BinomialForm":
        """``X^I1 - ratio X^I2``, then normalized."""
        return cls.make(I1, I2, 1, ratio)

    @classmethod
    def of_type(cls, I1: Sequence[int], I2: Sequence[int], t: int, epsilon: int) -> "BinomialForm":
        """``X^I1 - xi^epsilon X^I2`` with ``xi = zeta_{t-1}``."""
        return cls.make(I1, I2, 1, root_of_unity(t - 1, epsilon))

    @property
    def arity(self) -> int:
        return len(self.I1)

    @property
    def exponent_pair(self) -> Tuple[Exponent, Exponent]:
        return (self.I1, self.I2)

    @property
    def ratio(self) -> CyclotomicNumber:
        return self.alpha2 / self.alpha1

    def poly(self) -> MultiPoly:
        return MultiPoly.binomial(self.I1, self.I2, self.alpha1, self.alpha2)

    def ideal(self, order=GREVLEX) -> IdealPresentation:
        return IdealPresentation((self.poly(),), order)

    def __str__(self):
        return str(self.poly())


@dataclass(frozen=True)
class BinomialType:
    """Type ``(t, epsilon)``: the ratio is ``zeta_{t-1}^epsilon``."""

    t: int
    epsilon: int

    def __post_init__(self):
        if self.t < 2 or not 1 <= self.epsilon <= self.t - 1:
            raise ValueError(f"invalid binomial type ({self.t}, {self.epsilon})")

    @property
    def ratio(self) -> CyclotomicNumber:
        return root_of_unity(self.t - 1, self.epsilon)

    @property
    def is_canonical(self) -> bool:
        return math.gcd(self.t - 1, self.epsilon) == 1

    def canonical(self) -> "BinomialType":
        g = math.gcd(self.t - 1, self.epsilon)
        return BinomialType((self.t - 1) // g + 1, self.epsilon // g)


@dataclass(frozen=True, order=True)
class CoordinateHyperplane:
    """``H_i = Z(x_i)``."""

    index: int

    def poly(self, arity: int) -> MultiPoly:
        return MultiPoly.var(arity, self.index)

    def __str__(self):
        return f"H{self.index}"


@dataclass(frozen=True, order=True)
class CoordinateSubspace:
    """The linear space ``Z(x_i : i in indices)``."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    @property
    def codimension(self) -> int:
        return len(self.indices)

    def ideal(self, arity: int, order=GREVLEX) -> IdealPresentation:
        return IdealPresentation(tuple(MultiPoly.var(arity, i) for i in self.indices), order)

    def __str__(self):
        return "Z(" + ", ".join(f"x{i}" for i in self.indices) + ")"


Component = Union[BinomialForm, CoordinateHyperplane]


@dataclass(frozen=True)
class HypersurfaceUnion:
    """A reducible hypersurface ``m_1 C_1 + ... + m_s C_s``.

    Components are pairwise distinct; repeated components are merged by
    adding multiplicities.
    """

    components: Tuple[Tuple[Component, int], ...]

    def __post_init__(self):
        merged: Dict[Component, int] = {}
        for entry in self.components:
            comp, mult = entry if isinstance(entry, tuple) else (entry, 1)
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            merged[comp] = merged.get(comp, 0) + mult
        if not merged:
            raise ValueError("empty union")
        object.__setattr__(self, "components", tuple(merged.items()))

    @classmethod
    def of(cls, *components: Component) -> "HypersurfaceUnion":
        return cls(tuple((c, 1) for c in components))

    def parts(self) -> List[Component]:
        return [c for c, _ in self.components]

    def component_set(self) -> frozenset:
        return frozenset(self.parts())

    def __str__(self):
        out = []
        for c, m in self.components:
            s = str(c) if isinstance(c, CoordinateHyperplane) else f"Z({c})"
            out.append(s if m == 1 else f"{m}*{s}")
        return " + ".join(out)


@dataclass(frozen=True)
class BinomialVariety:
    """Variety cut out by binomial generators ``X^{I_j1} - r_j X^{I_j2}``."""

    generators: Tuple[BinomialForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("a binomial variety needs at least one generator")
        if len({g.arity for g in self.generators}) != 1:
            raise ValueError("generators live in different rings")

    @property
    def arity(self) -> int:
        return self.generators[0].arity

    def ideal(self, order=GREVLEX) -> IdealPresentation:
        return IdealPresentation(tuple(g.poly() for g in self.generators), order)

    def power(self, r: int) -> "BinomialVariety":
        """Generatorwise closed-form power."""
        return BinomialVariety(tuple(binomial_power(g, r) for g in self.generators))

    def types(self) -> List[Optional[BinomialType]]:
        return [detect_type(g) for g in self.generators]


# ---------------------------------------------------------------------------
# classification


def _classify(f: MultiPoly) -> Tuple[Optional[BinomialForm], str]:
    if f.is_zero():
        return None, "zero polynomial"
    if f.is_homogeneous() is None:
        return None, "not homogeneous"
    if len(f) != 2:
        return None, f"{len(f)} terms, a binomial has 2"
    (e1, c1), (e2, c2) = f.sorted_terms(LEX)
    if sum(e1) == 0:
        return None, "degree 0"
    if not monomial_gcd_coprime(e1, e2):
        shared = [f"x{i}" for i, (a, b) in enumerate(zip(e1, e2)) if a and b]
        return None, "monomials share " + ", ".join(shared) + "; the hypersurface is reducible"
    return BinomialForm.make(e1, e2, c1, -c2), "binomial"


def classify_binomial(f: MultiPoly) -> Optional[BinomialForm]:
    """Normalized :class:`BinomialForm` of ``f``, or None when ``f`` is not a coprime binomial."""
    return _classify(f)[0]


def explain_binomial(f: MultiPoly) -> str:
    """One-line reason for the outcome of :func:`classify_binomial`."""
    return _classify(f)[1]


# ---------------------------------------------------------------------------
# products and powers


def binomial_product(C: BinomialForm, D: BinomialForm) -> Optional[BinomialForm]:
    """``C * D`` in closed form; None when the exponent pairs differ (not a hypersurface)."""
    if C.exponent_pair != D.exponent_pair:
        return None
    return BinomialForm.make(C.I1, C.I2, C.alpha1 * D.alpha1, C.alpha2 * D.alpha2)


def binomial_power(C: BinomialForm, r: int) -> BinomialForm:
    """``C^{*r}`` is ``alpha1^r X^I1 - alpha2^r X^I2``."""
    if r < 1:
        raise ValueError("Hadamard power exponent must be >= 1")
    return BinomialForm.make(C.I1, C.I2, C.alpha1 ** r, C.alpha2 ** r)


def detect_type(C: BinomialForm) -> Optional[BinomialType]:
    """Canonical type ``(d + 1, k)`` where the ratio is ``zeta_d^k``, ``gcd(k, d) = 1``."""
    w = root_of_unity_witness(C.ratio)
    if w is None:
        return None
    return BinomialType(w.order + 1, w.exponent if w.exponent else w.order)


def min_idempotent_exponent(C: BinomialForm) -> Optional[int]:
    """Least ``t >= 2`` with ``C^{*t} = C``: one plus the order of the ratio."""
    d = multiplicative_order(C.ratio)
    return None if d is None else d + 1


def same_hypersurface(C: BinomialForm, D: BinomialForm) -> bool:
    return ideal_equal(C.ideal(), D.ideal())


def is_idempotent(V, t: int) -> bool:
    """Decide ``V^{*t} = V`` for a binomial, a binomial variety or a union."""
    if t < 2:
        raise ValueError("idempotency is checked for exponents t >= 2")
    if isinstance(V, BinomialForm):
        return ideal_equal(binomial_power(V, t).ideal(), V.ideal())
    if isinstance(V, BinomialVariety):
        return ideal_equal(V.power(t).ideal(), V.ideal())
    if isinstance(V, HypersurfaceUnion):
        return union_power(V, t).idempotent
    raise TypeError(f"cannot decide idempotency of {type(V).__name__}")


# ---------------------------------------------------------------------------
# coordinate hyperplanes and unions


def coordinate_product(hs: Sequence[CoordinateHyperplane]) -> CoordinateSubspace:
    """``H_{i1} * ... * H_{it} = Z(x_{i1}, ..., x_{it})``."""
    if not hs:
        raise ValueError("coordinate_product needs at least one hyperplane")
    return CoordinateSubspace(tuple(h.index for h in hs))


@dataclass(frozen=True)
class UnionPowerResult:
    """Outcome of :func:`union_power`.

    ``union`` holds the hypersurface components of the power (multiplicity
    1 each), ``lower_dimensional`` the coordinate subspaces of codimension
    >= 2 produced by products of distinct coordinate hyperplanes.
    ``conditions_hold`` is the two-condition criterion for idempotency:
    every component is a binomial on one common exponent pair with a
    root-of-unity ratio, and every product over a composition of ``r`` is
    again a component.
    """

    union: HypersurfaceUnion
    lower_dimensional: Tuple[CoordinateSubspace, ...]
    conditions_hold: bool
    idempotent: bool


def _product_of(multiset: Sequence[Component]) -> Union[Component, CoordinateSubspace]:
    planes = sorted({c.index for c in multiset if isinstance(c, CoordinateHyperplane)})
    if planes:
        # H_i * C = H_i for any C that is not a coordinate hyperplane
        if len(planes) == 1:
            return CoordinateHyperplane(planes[0])
        return CoordinateSubspace(tuple(planes))
    out = multiset[0]
    for c in multiset[1:]:
        nxt = binomial_product(out, c)
        if nxt is None:
            raise NonHypersurfaceError(
                f"components {out} and {c} have different exponent pairs; their product is not a hypersurface"
            )
        out = nxt
    return out


def union_power(U: HypersurfaceUnion, r: int) -> UnionPowerResult:
    """Expand ``(C_1 + ... + C_s)^{*r}`` over all ``d_1 + ... + d_s = r``, ``d_i >= 0``."""
    if r < 1:
        raise ValueError("Hadamard power exponent must be >= 1")
    comps = U.parts()
    hyper: List[Component] = []
    lower: List[CoordinateSubspace] = []
    for multiset in itertools.combinations_with_replacement(comps, r):
        piece = _product_of(multiset)
        if isinstance(piece, CoordinateSubspace):
            if piece not in lower:
                lower.append(piece)
        elif piece not in hyper:
            hyper.append(piece)

    binomials = [c for c in comps if isinstance(c, BinomialForm)]
    cond1 = (
        len(binomials) == len(comps)
        and len({c.exponent_pair for c in binomials}) == 1
        and all(multiplicative_order(c.ratio) is not None for c in binomials)
    )
    cond2 = cond1 and all(p in U.component_set() for p in hyper)
    result_union = HypersurfaceUnion(tuple((c, 1) for c in hyper))
    return UnionPowerResult(
        union=result_union,
        lower_dimensional=tuple(sorted(lower)),
        conditions_hold=cond1 and cond2,
        idempotent=result_union.component_set() == U.component_set(),
    )


def cyclic_label(C: BinomialForm, m: int) -> Optional[int]:
    """Index ``j`` in ``1..m`` with ratio ``zeta_m^j``, or None."""
    z = root_of_unity(m, 1)
    power = ONE
    for j in range(1, m + 1):
        power = power * z
        if power == C.ratio:
            return j
    return None


def multiplication_table(m: int) -> List[List[int]]:
    """Hadamard multiplication table of ``C_j = Z(X^I1 - zeta_m^j X^I2)``, ``j = 1..m``.

    Entry ``[j-1][k-1]`` is the label of ``C_j * C_k``; computed from the
    closed-form product, with ``C_m`` acting as the identity.
    """
    if m < 1:
        raise ValueError("table order must be >= 1")
    I1, I2 = (1, 0), (0, 1)
    comps = [BinomialForm.with_ratio(I1, I2, root_of_unity(m, j)) for j in range(1, m + 1)]
    table = []
    for cj in comps:
        row = []
        for ck in comps:
            row.append(cyclic_label(binomial_product(cj, ck), m))
        table.append(row)
    return table


# ---------------------------------------------------------------------------
# binomial varieties


@dataclass(frozen=True)
class VarietyExponent:
    """Minimal idempotency exponent of a binomial variety.

    ``exponent`` is ``1 + lcm`` of the multiplicative orders of the
    generator ratios.  ``formula_exponent`` is ``1 + lcm(t_i / gcd(t_i, eps_i))``
    evaluated on the canonical generator types, kept next to it because the
    two generally differ.  ``verified`` is True/False from a brute-force
    power check, or None when the instance was too large to check.
    """

    exponent: int
    orders: Tuple[int, ...]
    types: Tuple[BinomialType, ...]
    formula_exponent: int
    verified: Optional[bool]


def brute_force_min_exponent(V: BinomialVariety, limit: int = BRUTE_FORCE_MAX_EXPONENT) -> Optional[int]:
    """Least ``t`` in ``2..limit`` with ``V^{*t} = V`` by generatorwise powers and ideal equality."""
    base = V.ideal()
    for t in range(2, limit + 1):
        if ideal_equal(V.power(t).ideal(), base):
            return t
    return None


def variety_min_exponent(V: BinomialVariety, verify: bool = True) -> Optional[VarietyExponent]:
    if isinstance(V, BinomialForm):
        V = BinomialVariety((V,))
    orders = []
    for g in V.generators:
        d = multiplicative_order(g.ratio)
        if d is None:
            return None
        orders.append(d)
    lcm = reduce(math.lcm, orders, 1)
    exponent = lcm + 1
    types = tuple(detect_type(g) for g in V.generators)
    formula = reduce(math.lcm, (ty.t // math.gcd(ty.t, ty.epsilon) for ty in types), 1) + 1
    verified = None
    if verify and exponent <= BRUTE_FORCE_MAX_EXPONENT and V.arity <= BRUTE_FORCE_MAX_ARITY:
        verified = brute_force_min_exponent(V, exponent) == exponent
    return VarietyExponent(exponent, tuple(orders), types, formula, verified)


def is_pure_difference_ideal(V: BinomialVariety) -> bool:
    """Every generator is ``X^a - X^b`` (both coefficients 1)."""
    if isinstance(V, BinomialForm):
        V = BinomialVariety((V,))
    return all(g.ratio.is_one() for g in V.generators)


def binomial_variety(*polys: MultiPoly) -> BinomialVariety:
    """Build a :class:`BinomialVariety` from polynomials, rejecting non-binomials."""
    gens = []
    for f in polys:
        form, why = _classify(f)
        if form is None:
            raise ValueError(f"{f} is not a coprime binomial: {why}")
        gens.append(form)
    return BinomialVariety(tuple(gens))


# ---------------------------------------------------------------------------
# exact sampling of points on a binomial hypersurface


def _int_root(n: int, e: int) -> Optional[int]:
    if n < 0:
        return None
    r = round(n ** (1.0 / e)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** e == n:
            return c
    return None


def _exact_root(c: CyclotomicNumber, e: int) -> Optional[CyclotomicNumber]:
    """Some ``e``-th root of ``c`` when ``c`` is a root of unity or a rational perfect power."""
    if e == 1:
        return c
    w = root_of_unity_witness(c)
    if w is not None:
        return root_of_unity(w.order * e, w.exponent)
    if c.is_rational():
        q = c.to_fraction()
        sign = ONE
        if q < 0:
            sign = root_of_unity(2 * e, 1)
            q = -q
        num, den = _int_root(q.numerator, e), _int_root(q.denominator, e)
        if num is None or den is None:
            return None
        return sign * Fraction(num, den)
    return None


def _random_rational(rng: random.Random) -> Fraction:
    num = rng.choice([-1, 1]) * rng.randint(1, 5)
    return Fraction(num, rng.randint(1, 4))


def sample_exact_point(C: BinomialForm, rng: random.Random):
    """Exact point of ``C`` with every coordinate nonzero.

    A variable of exponent 1 in ``I1`` (else in ``I2``) is solved for
    rationally.  Failing that, the other coordinates are drawn as ``e``-th
    powers so that the remaining equation ``x_k^e = c`` has an exact root.
    """
    from .core import ProjectivePoint

    n = C.arity
    for side in (0, 1):
        mine, other = (C.I1, C.I2) if side == 0 else (C.I2, C.I1)
        lin = [i for i, k in enumerate(mine) if k == 1]
        if lin:
            k = lin[0]
            vals = [_random_rational(rng) for _ in range(n)]
            vals[k] = Fraction(1)
            coords = [as_cyclotomic(v) for v in vals]
            rest = MultiPoly.monomial(mine).evaluate(coords)
            a_mine, a_other = (C.alpha1, C.alpha2) if side == 0 else (C.alpha2, C.alpha1)
            coords[k] = a_other * MultiPoly.monomial(other).evaluate(coords) / (a_mine * rest)
            return ProjectivePoint(tuple(coords))
    k = next(i for i, x in enumerate(C.I1) if x)
    e = C.I1[k]
    root = _exact_root(C.ratio, e)
    if root is None:
        raise ValueError(f"cannot sample exact points on {C}: ratio has no exact {e}-th root")
    vals = [as_cyclotomic(_random_rational(rng) ** e) for _ in range(n)]
    coords = list(vals)
    coords[k] = ONE
    # every other coordinate is a perfect e-th power, so X^I2 / rest is one too
    rest = MultiPoly.monomial(C.I1).evaluate(coords)
    target = MultiPoly.monomial(C.I2).evaluate(coords) / rest
    r = _exact_root(target, e)
    coords[k] = root * r
    return ProjectivePoint(tuple(coords))
