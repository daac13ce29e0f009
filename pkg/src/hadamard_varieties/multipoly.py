"""Sparse multivariate polynomials over Q(zeta_N) and monomial orders.

A polynomial lives in ``k[x0, ..., xn]`` with a fixed ``arity = n + 1``.
Terms are a dict mapping exponent tuples to nonzero
:class:`~hadamard_varieties.exactnum.CyclotomicNumber` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exactnum import ONE, ZERO, CyclotomicNumber, Scalar, as_cyclotomic

Exponent = Tuple[int, ...]


class RingError(ValueError):
    """Operands live in polynomial rings of different arity."""


# ---------------------------------------------------------------------------
# exponent vectors


def total_degree(e: Exponent) -> int:
    return sum(e)


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponent, b: Exponent) -> bool:
    """True when ``X^a`` divides ``X^b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Exponent, a: Exponent) -> Exponent:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd_coprime(i1: Sequence[int], i2: Sequence[int]) -> bool:
    """True iff the monomials ``X^i1`` and ``X^i2`` share no variable."""
    if len(i1) != len(i2):
        raise RingError("exponent vectors of different length")
    return all(min(a, b) == 0 for a, b in zip(i1, i2))


def unit_exponent(arity: int, i: int) -> Exponent:
    return tuple(1 if j == i else 0 for j in range(arity))


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors.

    ``kind`` is one of ``"lex"``, ``"grevlex"``, ``"grlex"`` (graded lex) or
    ``"block"``.  ``priority`` lists variable indices from most to least
    significant (default ``x0 > x1 > ...``).  A block order compares the
    first ``block`` variables of ``priority`` by grevlex and breaks ties with
    grevlex on the remaining ones, so it eliminates that leading block.
    """

    kind: str = "grevlex"
    priority: Optional[Tuple[int, ...]] = None
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "grlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))
            if sorted(self.priority) != list(range(len(self.priority))):
                raise ValueError("priority must be a permutation of variable indices")

    def _permute(self, e: Exponent) -> Exponent:
        if self.priority is None:
            return e
        return tuple(e[p] for p in self.priority)

    def key(self, e: Exponent) -> Tuple[int, ...]:
        """Flat integer sort key: a larger key means a larger monomial."""
        e = self._permute(e)
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e),) + e
        if self.kind == "grevlex":
            return (sum(e),) + tuple(-x for x in reversed(e))
        head, tail = e[: self.block], e[self.block:]
        return (
            (sum(head),) + tuple(-x for x in reversed(head))
            + (sum(tail),) + tuple(-x for x in reversed(tail))
        )

    def is_elimination_for(self, variables: Iterable[int], arity: int) -> bool:
        """Whether this order eliminates exactly-or-more than ``variables``."""
        variables = set(variables)
        if not variables:
            return True
        if self.kind == "lex":
            perm = self.priority or tuple(range(arity))
            return set(perm[: len(variables)]) == variables
        if self.kind == "block":
            perm = self.priority or tuple(range(arity))
            return set(perm[: self.block]) == variables
        return False

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")


def make_order(kind: str) -> MonomialOrder:
    aliases = {"graded-lex": "grlex", "deglex": "grlex"}
    return MonomialOrder(aliases.get(kind, kind))


# ---------------------------------------------------------------------------
# polynomials


class MultiPoly:
    """Sparse polynomial in ``arity`` variables with exact coefficients.

    Treat instances as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Optional[Dict[Exponent, Scalar]] = None):
        self.arity = arity
        clean: Dict[Exponent, CyclotomicNumber] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != arity:
                raise RingError(f"exponent {e} does not match arity {arity}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = as_cyclotomic(c)
            if e in clean:
                c = clean[e] + c
            if c.is_zero():
                clean.pop(e, None)
            else:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _from_clean(cls, arity: int, terms: Dict[Exponent, CyclotomicNumber]) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.arity = arity
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls._from_clean(arity, {})

    @classmethod
    def constant(cls, arity: int, c: Scalar) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, arity: int, i: int) -> "MultiPoly":
        if not 0 <= i < arity:
            raise RingError(f"variable x{i} outside ring of arity {arity}")
        return cls._from_clean(arity, {unit_exponent(arity, i): ONE})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def binomial(cls, i1: Sequence[int], i2: Sequence[int], a1: Scalar, a2: Scalar) -> "MultiPoly":
        """Return ``a1 X^i1 - a2 X^i2``."""
        return cls(len(i1), {tuple(i1): as_cyclotomic(a1)}) - cls(len(i2), {tuple(i2): as_cyclotomic(a2)})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> List[Exponent]:
        return list(self.terms)

    def coefficient(self, e: Sequence[int]) -> CyclotomicNumber:
        return self.terms.get(tuple(e), ZERO)

    def sorted_terms(self, order: MonomialOrder = LEX) -> List[Tuple[Exponent, CyclotomicNumber]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> Optional[int]:
        """Common total degree of all terms, or None when degrees are mixed.

        The zero polynomial is homogeneous of every degree; it returns None
        as well, so callers that care must test :meth:`is_zero` first.
        """
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def variables(self) -> List[int]:
        """Indices of variables appearing in some term."""
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> Tuple[Exponent, CyclotomicNumber]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponent:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> CyclotomicNumber:
        return self.leading_term(order)[1]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.arity != other.arity:
            raise RingError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, CyclotomicNumber)) or hasattr(other, "denominator"):
                other = MultiPoly.constant(self.arity, other)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._from_clean(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, CyclotomicNumber)) or hasattr(other, "denominator"):
                other = MultiPoly.constant(self.arity, other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "MultiPoly":
        c = as_cyclotomic(c)
        if c.is_zero():
            return MultiPoly.zero(self.arity)
        if c.is_one():
            return self
        return MultiPoly._from_clean(self.arity, {e: a * c for e, a in self.terms.items()})

    def mul_term(self, e: Exponent, c: Scalar) -> "MultiPoly":
        """Multiply by the single term ``c X^e``."""
        c = as_cyclotomic(c)
        if c.is_zero():
            return MultiPoly.zero(self.arity)
        return MultiPoly._from_clean(
            self.arity, {mono_mul(m, e): a * c for m, a in self.terms.items()}
        )

    def div_term(self, e: Exponent, c: Scalar) -> "MultiPoly":
        """Exact division by the term ``c X^e``; every term must be divisible."""
        c = as_cyclotomic(c)
        out = {}
        for m, a in self.terms.items():
            if not mono_divides(e, m):
                raise ValueError(f"term with exponent {m} is not divisible by {e}")
            out[mono_div(m, e)] = a / c
        return MultiPoly._from_clean(self.arity, out)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            out: Dict[Exponent, CyclotomicNumber] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = mono_mul(ea, eb)
                    out[e] = out[e] + ca * cb if e in out else ca * cb
            return MultiPoly._from_clean(self.arity, {e: c for e, c in out.items() if not c.is_zero()})
        if isinstance(other, (int, CyclotomicNumber)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.arity, 1)
        for _ in range(k):
            result = result * self
        return result

    def monic(self, order: MonomialOrder = LEX) -> "MultiPoly":
        """Rescale so the leading coefficient under ``order`` is 1."""
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient(order).inverse())

    def map_coefficients(self, fn: Callable[[Exponent, CyclotomicNumber], Scalar]) -> "MultiPoly":
        return MultiPoly(self.arity, {e: fn(e, c) for e, c in self.terms.items()})

    def rename(self, arity: int, mapping: Sequence[int]) -> "MultiPoly":
        """Move variable ``i`` to position ``mapping[i]`` in a ring of ``arity``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * arity
            for i, x in enumerate(e):
                if x:
                    new[mapping[i]] += x
            out[tuple(new)] = c
        return MultiPoly(arity, out)

    def evaluate(self, point: Sequence[Scalar]) -> CyclotomicNumber:
        """Evaluate at a coordinate vector (a representative of a projective point)."""
        coords = [as_cyclotomic(p) for p in getattr(point, "coords", point)]
        if len(coords) != self.arity:
            raise RingError(f"point of length {len(coords)} in ring of arity {self.arity}")
        total = ZERO
        powers: Dict[Tuple[int, int], CyclotomicNumber] = {}
        for e, c in self.terms.items():
            term = c
            for i, x in enumerate(e):
                if x:
                    if (i, x) not in powers:
                        powers[(i, x)] = coords[i] ** x
                    term = term * powers[(i, x)]
            total = total + term
        return total

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, CyclotomicNumber)):
            return self == MultiPoly.constant(self.arity, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[Tuple[Exponent, CyclotomicNumber]]:
        return iter(self.terms.items())

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self.arity}, {str(self)!r})"


def evaluate(f: MultiPoly, point) -> CyclotomicNumber:
    return f.evaluate(point)


def leading_term(f: MultiPoly, order: MonomialOrder = GREVLEX) -> Tuple[Exponent, CyclotomicNumber]:
    return f.leading_term(order)


def is_homogeneous(f: MultiPoly) -> Optional[int]:
    return f.is_homogeneous()
