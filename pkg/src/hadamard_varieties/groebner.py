"""Buchberger's algorithm, ideal equality and elimination.

Pairs are processed by the normal strategy (smallest lcm first) and pruned
with Buchberger's product and chain criteria.  The reduced basis is monic,
interreduced and sorted by descending leading monomial, so it is a canonical
form for an ideal under a fixed order.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .multipoly import (
    GREVLEX,
    MonomialOrder,
    MultiPoly,
    RingError,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

log = logging.getLogger(__name__)


class ContractError(ValueError):
    """A caller violated an operation's precondition (e.g. a non-elimination order)."""


class OracleScaleError(ValueError):
    """Input is larger than the elimination oracle is meant to handle."""


def normal_form(f: MultiPoly, G: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> MultiPoly:
    """Fully reduce ``f`` by ``G``: no term of the result is divisible by any ``LM(g)``."""
    for g in G:
        if g.arity != f.arity:
            raise RingError("normal_form: arity mismatch")
    divisors = [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in G if g]
    key = order.key
    p = dict(f.terms)
    heap = [(tuple(-k for k in key(e)), e) for e in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lm, lc, g in divisors:
            if mono_divides(lm, e):
                q = c / lc
                shift = mono_div(e, lm)
                for ge, gc in g.terms.items():
                    if ge == lm:
                        continue
                    m = mono_mul(ge, shift)
                    old = p.get(m)
                    if old is None:
                        p[m] = -(q * gc)
                        heapq.heappush(heap, (tuple(-k for k in key(m)), m))
                    else:
                        v = old - q * gc
                        if v.is_zero():
                            del p[m]
                        else:
                            p[m] = v
                break
        else:
            rem[e] = c
    return MultiPoly._from_clean(f.arity, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX) -> MultiPoly:
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    lcm = mono_lcm(ef, eg)
    return f.mul_term(mono_div(lcm, ef), cf.inverse()) - g.mul_term(mono_div(lcm, eg), cg.inverse())


def _disjoint(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _groebner(gens: Sequence[MultiPoly], order: MonomialOrder) -> List[MultiPoly]:
    """Unreduced Groebner basis.

    Buchberger's algorithm with the Gebauer-Moeller update, which applies the
    product and chain criteria when a new element enters the basis.
    """
    polys: List[MultiPoly] = []
    lms: List[tuple] = []
    active: List[int] = []
    # pending pairs: (sort key, i, j, lcm)
    pairs: List[tuple] = []
    key = order.key

    def pair_key(lcm, i, j):
        return (sum(lcm), key(lcm), i, j)

    def update(h: MultiPoly):
        h = h.monic(order)
        polys.append(h)
        hl = h.leading_monomial(order)
        lms.append(hl)
        t = len(polys) - 1
        cands = [(g, mono_lcm(hl, lms[g])) for g in active]
        kept = []
        for idx, (g, lcm) in enumerate(cands):
            if _disjoint(hl, lms[g]):
                kept.append((g, lcm))
                continue
            others = [l2 for g2, l2 in cands[idx + 1:]] + [l2 for g2, l2 in kept]
            if any(mono_divides(l2, lcm) for l2 in others):
                continue
            kept.append((g, lcm))
        new_pairs = [(g, lcm) for g, lcm in kept if not _disjoint(hl, lms[g])]
        survivors = []
        for pk, i, j, lcm in pairs:
            if (mono_divides(hl, lcm) and mono_lcm(lms[i], hl) != lcm and mono_lcm(hl, lms[j]) != lcm):
                continue
            survivors.append((pk, i, j, lcm))
        pairs[:] = survivors
        for g, lcm in new_pairs:
            pairs.append((pair_key(lcm, g, t), g, t, lcm))
        active[:] = [g for g in active if not mono_divides(hl, lms[g])] + [t]

    for g in gens:
        if g.is_zero():
            continue
        h = normal_form(g, [polys[i] for i in active], order) if active else g
        if h:
            update(h)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: pairs[k][0])
        _, i, j, _ = pairs.pop(best)
        h = normal_form(s_polynomial(polys[i], polys[j], order), [polys[k] for k in active], order)
        if h:
            update(h)
    return [polys[i] for i in active]


def reduce_basis(G: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> List[MultiPoly]:
    """Turn a Groebner basis into the reduced one (monic, interreduced, sorted)."""
    G = [g.monic(order) for g in G if g]
    minimal: List[MultiPoly] = []
    lms = [g.leading_monomial(order) for g in G]
    for i, g in enumerate(G):
        dominated = False
        for j, h in enumerate(G):
            if j == i:
                continue
            if mono_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm, lc = g.leading_term(order)
        tail = MultiPoly._from_clean(g.arity, {e: c for e, c in g.terms.items() if e != lm})
        tail = normal_form(tail, others, order) if others else tail
        reduced.append((MultiPoly._from_clean(g.arity, {lm: lc}) + tail).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


def buchberger(I, order: Optional[MonomialOrder] = None) -> List[MultiPoly]:
    """Reduced Groebner basis of an :class:`IdealPresentation` or generator list."""
    if isinstance(I, IdealPresentation):
        return I.reduced_basis() if order is None or order == I.order else IdealPresentation(I.generators, order).reduced_basis()
    order = order or GREVLEX
    return reduce_basis(_groebner(list(I), order), order)


def is_groebner_basis(G: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> bool:
    """True iff every S-polynomial of ``G`` reduces to zero modulo ``G``."""
    G = [g for g in G if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if normal_form(s_polynomial(G[i], G[j], order), G, order):
                return False
    return True


@dataclass
class IdealPresentation:
    """Generators of an ideal plus a monomial order.

    ``is_groebner`` records that the generators are already known to form a
    Groebner basis for ``order``; the reduced basis is computed lazily and
    cached.
    """

    generators: Tuple[MultiPoly, ...]
    order: MonomialOrder = GREVLEX
    is_groebner: bool = False
    _reduced: Optional[List[MultiPoly]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        if not self.generators:
            raise ValueError("an ideal presentation needs at least one generator")
        arities = {g.arity for g in self.generators}
        if len(arities) != 1:
            raise RingError(f"generators with mixed arities {sorted(arities)}")

    @property
    def arity(self) -> int:
        return self.generators[0].arity

    def reduced_basis(self) -> List[MultiPoly]:
        if self._reduced is None:
            if self.is_groebner:
                self._reduced = reduce_basis(self.generators, self.order)
            else:
                self._reduced = reduce_basis(_groebner(self.generators, self.order), self.order)
        return list(self._reduced)

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self.reduced_basis(), self.order).is_zero()

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def ideal(*gens: MultiPoly, order: MonomialOrder = GREVLEX) -> IdealPresentation:
    return IdealPresentation(tuple(gens), order)


def ideal_equal(A: IdealPresentation, B: IdealPresentation, order: Optional[MonomialOrder] = None) -> bool:
    """Compare two ideals through their reduced bases under one order."""
    if A.arity != B.arity:
        raise RingError("ideal_equal: arity mismatch")
    order = order or A.order
    ga = buchberger(A, order)
    gb = buchberger(B, order)
    return len(ga) == len(gb) and all(f == g for f, g in zip(ga, gb))


def elimination_order(arity: int, eliminate_vars: Iterable[int]) -> MonomialOrder:
    """Block order with ``eliminate_vars`` ahead of the rest, grevlex inside blocks."""
    elim = sorted(set(eliminate_vars))
    rest = [i for i in range(arity) if i not in elim]
    return MonomialOrder("block", tuple(elim + rest), block=len(elim))


def eliminate(I: IdealPresentation, keep: Iterable[int]) -> IdealPresentation:
    """Generators of ``I`` intersected with the subring in the ``keep`` variables.

    ``I.order`` must eliminate the complement of ``keep``; see
    :func:`elimination_order`.
    """
    keep = set(keep)
    drop = set(range(I.arity)) - keep
    if not drop:
        return I
    if not I.order.is_elimination_for(drop, I.arity):
        raise ContractError(f"order {I.order} does not eliminate variables {sorted(drop)}")
    basis = I.reduced_basis()
    kept = [g for g in basis if all(g_var in keep for g_var in g.variables())]
    if not kept:
        kept = [MultiPoly.zero(I.arity)]
    return IdealPresentation(tuple(kept), I.order, is_groebner=True)


ORACLE_MAX_ARITY = 4
ORACLE_MAX_DEGREE = 4


def star_varieties_elim(V: IdealPresentation, W: IdealPresentation) -> IdealPresentation:
    """Ideal of ``V * W`` (Hadamard product) by elimination.

    Works in ``k[y, z, x]`` with ``I(V)(y) + I(W)(z) + <x_i - y_i z_i>`` and
    eliminates ``y`` and ``z``.  The result is the ideal of the closure of the
    coordinatewise-product image of the affine cones, returned as the reduced
    grevlex basis in ``x``.
    """
    a = V.arity
    if W.arity != a:
        raise RingError("star_varieties_elim: arity mismatch")
    if a > ORACLE_MAX_ARITY:
        raise OracleScaleError(f"arity {a} exceeds oracle limit {ORACLE_MAX_ARITY}")
    for g in V.generators + W.generators:
        if g.degree() > ORACLE_MAX_DEGREE:
            raise OracleScaleError(f"degree {g.degree()} exceeds oracle limit {ORACLE_MAX_DEGREE}")
    big = 3 * a
    ys = list(range(a))
    zs = list(range(a, 2 * a))
    xs = list(range(2 * a, 3 * a))
    gens = [g.rename(big, ys) for g in V.generators if g]
    gens += [g.rename(big, zs) for g in W.generators if g]
    for i in range(a):
        gens.append(MultiPoly.var(big, xs[i]) - MultiPoly.var(big, ys[i]) * MultiPoly.var(big, zs[i]))
    order = MonomialOrder("block", None, block=2 * a)
    log.debug("eliminating %d generators in %d variables", len(gens), big)
    elim = eliminate(IdealPresentation(tuple(gens), order), xs)
    out = []
    for g in elim.generators:
        terms = {tuple(e[2 * a:]): c for e, c in g.terms.items()}
        out.append(MultiPoly(a, terms))
    return IdealPresentation(tuple(out), GREVLEX, is_groebner=True)
