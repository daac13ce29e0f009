"""Command-line interface.

Every subcommand prints either human-readable text or, with
``--format json``, one JSON record::

    {"command": ..., "diagnostics": [...], "inputs": {...}, "result": ...}

``diagnostics`` is a list of objects with at least ``level`` ("note" or
"error") and ``message``.  Parse errors add ``position`` and ``expected``;
domain errors add ``type``.  On error ``result`` is null.  Keys are sorted, so identical invocations give byte-identical output.  Exit
status is 0 on success, 1 on a domain error (a violated mathematical
precondition) and 2 on a parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from . import binomial as bn
from . import core, groebner, numeric
from .exactnum import complex_embedding, cyclotomic_polynomial, multiplicative_order
from .multipoly import MonomialOrder, MultiPoly, make_order, monomial_gcd_coprime
from .parsing import (
    ParseError,
    format_number,
    format_point,
    format_poly,
    parse_exponent,
    parse_number,
    parse_point,
    parse_poly,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2

DOMAIN_ERRORS = (ValueError, ZeroDivisionError, ArithmeticError)


class DomainError(ValueError):
    pass


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


# ---------------------------------------------------------------------------
# helpers


class Context:
    """Parsed inputs for one invocation."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.diagnostics: List[dict] = []
        self.inputs: Dict[str, object] = {
            k: v for k, v in sorted(vars(args).items())
            if k not in ("command", "format") and v is not None and v is not False
        }
        self._arity: Optional[int] = getattr(args, "vars", None)

    def note(self, message: str) -> None:
        self.diagnostics.append({"level": "note", "message": message})

    def arity(self, *texts: str, points: Sequence[str] = ()) -> int:
        if self._arity is not None:
            return self._arity
        n = 1
        for t in texts:
            n = max(n, parse_poly(t).arity)
        for p in points:
            n = max(n, len(parse_point(p)))
        self._arity = n
        return n

    def polys(self, texts: Sequence[str], extra_points: Sequence[str] = (), others: Sequence[str] = ()) -> List[MultiPoly]:
        n = self.arity(*texts, *others, points=extra_points)
        return [parse_poly(t, n) for t in texts]

    def point(self, text: str) -> core.ProjectivePoint:
        p = core.ProjectivePoint(tuple(parse_point(text)))
        if self._arity is not None and p.arity != self._arity:
            raise DomainError(f"point {text} has {p.arity} coordinates, expected {self._arity}")
        return p

    def order(self) -> MonomialOrder:
        return make_order(getattr(self.args, "order", None) or "lex")


def _require(values, name: str, count: Optional[int] = None):
    values = values or []
    if count is not None and len(values) != count:
        raise _ArgError(f"expected exactly {count} --{name} argument(s), got {len(values)}")
    if not values:
        raise _ArgError(f"missing --{name}")
    return values


def _binomial(f: MultiPoly) -> bn.BinomialForm:
    form = bn.classify_binomial(f)
    if form is None:
        raise DomainError(f"{format_poly(f)} is not a coprime binomial: {bn.explain_binomial(f)}")
    return form


def _form_record(C: bn.BinomialForm) -> dict:
    return {
        "I1": list(C.I1),
        "I2": list(C.I2),
        "alpha1": format_number(C.alpha1),
        "alpha2": format_number(C.alpha2),
        "equation": format_poly(C.poly()),
    }


def _type_record(ty: Optional[bn.BinomialType]):
    return None if ty is None else {"t": ty.t, "epsilon": ty.epsilon}


def _component(f: MultiPoly):
    """A single variable power ``x_i^m`` is the hyperplane ``H_i`` with multiplicity m."""
    if len(f) == 1:
        (e, c), = f.terms.items()
        used = [i for i, k in enumerate(e) if k]
        if len(used) == 1:
            return bn.CoordinateHyperplane(used[0]), e[used[0]]
    return _binomial(f), 1


def _component_str(c) -> str:
    return str(c) if isinstance(c, bn.CoordinateHyperplane) else format_poly(c.poly())


# ---------------------------------------------------------------------------
# commands; each returns (result, text)


def cmd_parse_check(ctx: Context):
    a = ctx.args
    fs = ctx.polys(_require(a.poly, "poly"))
    ctx.inputs["poly"] = a.poly
    out = []
    for f in fs:
        rec = {"canonical": format_poly(f), "terms": len(f), "arity": f.arity,
               "homogeneous_degree": f.is_homogeneous()}
        if f.is_zero():
            rec["leading_term"] = None
            ctx.note("zero polynomial: homogeneous of every degree")
        else:
            e, c = f.leading_term(ctx.order())
            rec["leading_term"] = {"exponent": list(e), "coefficient": format_number(c)}
        out.append(rec)
    text = "\n".join(
        f"{r['canonical']}  (degree {r['homogeneous_degree'] if r['homogeneous_degree'] is not None else 'mixed'})"
        for r in out
    )
    return out, text


def cmd_arith(ctx: Context):
    a = ctx.args
    ctx.inputs.update(poly=a.poly, op=a.op)
    if a.op == "scale":
        f, = ctx.polys(_require(a.poly, "poly", 1))
        ctx.inputs["scalar"] = a.scalar
        r = f.scale(parse_number(_require([a.scalar] if a.scalar else [], "scalar")[0]))
    else:
        f, g = ctx.polys(_require(a.poly, "poly", 2))
        r = {"add": f + g, "sub": f - g, "mul": f * g}[a.op]
    return format_poly(r), format_poly(r)


def cmd_evaluate(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1), extra_points=_require(a.point, "point", 1))
    P = ctx.point(a.point[0])
    ctx.inputs.update(poly=a.poly, point=a.point)
    v = f.evaluate(P)
    return format_number(v), format_number(v)


def cmd_coprime(ctx: Context):
    a = ctx.args
    i1, i2 = parse_exponent(a.i1), parse_exponent(a.i2)
    ctx.inputs.update(i1=list(i1), i2=list(i2))
    r = monomial_gcd_coprime(i1, i2)
    return r, str(r).lower()


def cmd_number(ctx: Context):
    a = ctx.args
    c = parse_number(a.value)
    ctx.inputs["value"] = a.value
    z = complex_embedding(c)
    order = multiplicative_order(c) if not c.is_zero() else None
    if c.is_zero():
        ctx.note("multiplicative order of 0 is undefined")
    rec = {"value": format_number(c), "conductor": c.canonical().conductor,
           "order": order, "embedding": [round(z.real, 15), round(z.imag, 15)]}
    text = f"{rec['value']}  order={order if order is not None else 'none'}  ~ {z.real:.12g}{z.imag:+.12g}i"
    return rec, text


def cmd_cyclotomic(ctx: Context):
    n = ctx.args.n
    ctx.inputs["n"] = n
    coeffs = cyclotomic_polynomial(n)
    f = MultiPoly(1, {(k,): c for k, c in enumerate(coeffs)})
    return {"coefficients": list(coeffs), "polynomial": format_poly(f).replace("x0", "x")}, format_poly(f).replace("x0", "x")


def cmd_normal_form(ctx: Context):
    a = ctx.args
    texts = _require(a.poly, "poly", 1) + _require(a.gen, "gen")
    f, *G = ctx.polys(texts)
    ctx.inputs.update(poly=a.poly, gen=a.gen, order=str(ctx.order()))
    r = groebner.normal_form(f, G, ctx.order())
    return format_poly(r), format_poly(r)


def cmd_groebner(ctx: Context):
    a = ctx.args
    G = ctx.polys(_require(a.gen, "gen"))
    ctx.inputs.update(gen=a.gen, order=str(ctx.order()))
    if a.check:
        r = groebner.is_groebner_basis(G, ctx.order())
        return {"is_groebner_basis": r}, str(r).lower()
    basis = groebner.buchberger(G, ctx.order())
    out = [format_poly(g) for g in basis]
    return {"reduced_basis": out}, "\n".join(out)


def cmd_ideal_equal(ctx: Context):
    a = ctx.args
    A = _require(a.gen_a, "gen-a")
    B = _require(a.gen_b, "gen-b")
    polys = ctx.polys(A + B)
    ctx.inputs.update(gen_a=A, gen_b=B, order=str(ctx.order()))
    IA = groebner.IdealPresentation(tuple(polys[: len(A)]), ctx.order())
    IB = groebner.IdealPresentation(tuple(polys[len(A):]), ctx.order())
    r = groebner.ideal_equal(IA, IB)
    return r, str(r).lower()


def cmd_eliminate(ctx: Context):
    a = ctx.args
    G = ctx.polys(_require(a.gen, "gen"))
    keep = parse_exponent(a.keep)
    n = G[0].arity
    ctx.inputs.update(gen=a.gen, keep=list(keep))
    order = groebner.elimination_order(n, [i for i in range(n) if i not in keep])
    r = groebner.eliminate(groebner.IdealPresentation(tuple(G), order), keep)
    out = [format_poly(g) for g in r.generators if g]
    return {"generators": out}, "\n".join(out) if out else "0"


def cmd_star(ctx: Context):
    a = ctx.args
    A = _require(a.gen_a, "gen-a")
    B = _require(a.gen_b, "gen-b")
    polys = ctx.polys(A + B)
    ctx.inputs.update(gen_a=A, gen_b=B)
    V = groebner.IdealPresentation(tuple(polys[: len(A)]))
    W = groebner.IdealPresentation(tuple(polys[len(A):]))
    r = groebner.star_varieties_elim(V, W)
    out = [format_poly(g.monic()) for g in r.generators if g]
    return {"generators": out}, "\n".join(out) if out else "0"


def cmd_star_points(ctx: Context):
    a = ctx.args
    p, q = (ctx.point(t) for t in _require(a.point, "point", 2))
    ctx.inputs["point"] = a.point
    r = core.star_point(p, q)
    if r is None:
        ctx.note("all coordinate products vanish: the product is not defined")
        return None, "undefined"
    r = r.normalized()
    return format_point(r), format_point(r)


def cmd_delta(ctx: Context):
    a = ctx.args
    p = ctx.point(_require(a.point, "point", 1)[0])
    ctx.inputs["point"] = a.point
    r = core.delta_level(p)
    return r, str(r)


def cmd_invert(ctx: Context):
    a = ctx.args
    p = ctx.point(_require(a.point, "point", 1)[0])
    ctx.inputs["point"] = a.point
    r = core.invert_point(p).normalized()
    return format_point(r), format_point(r)


def cmd_quotient(ctx: Context):
    a = ctx.args
    q, p = (ctx.point(t) for t in _require(a.point, "point", 2))
    ctx.inputs["point"] = a.point
    r, level = core.quotient_point(q, p)
    r = r.normalized() if r is not None else None
    rec = {"point": format_point(r) if r is not None else None, "delta_level": level}
    return rec, f"{rec['point']}  (Delta_{level})"


def cmd_transform(ctx: Context):
    a = ctx.args
    texts = _require(a.poly, "poly")
    ptxt = _require(a.point, "point", 1)[0]
    fs = ctx.polys(texts, extra_points=[ptxt])
    P = ctx.point(ptxt)
    ctx.inputs.update(poly=texts, point=ptxt, order=str(ctx.order()))
    I = groebner.IdealPresentation(tuple(fs), ctx.order(), is_groebner=a.groebner)
    J = core.transform_ideal(I, P)
    out = [format_poly(g) for g in J.generators]
    if a.groebner:
        ctx.note("input declared a Groebner basis; output is a Groebner basis of the transformed ideal")
    return {"generators": out, "is_groebner": J.is_groebner}, "\n".join(out)


def cmd_classify(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1))
    ctx.inputs["poly"] = a.poly
    form = bn.classify_binomial(f)
    if form is None:
        ctx.note(bn.explain_binomial(f))
        return None, f"not a binomial hypersurface: {bn.explain_binomial(f)}"
    rec = _form_record(form)
    return rec, f"I1={list(form.I1)} I2={list(form.I2)} alpha1={rec['alpha1']} alpha2={rec['alpha2']}"


def cmd_product(ctx: Context):
    a = ctx.args
    f, g = ctx.polys(_require(a.poly, "poly", 2))
    ctx.inputs["poly"] = a.poly
    r = bn.binomial_product(_binomial(f), _binomial(g))
    if r is None:
        ctx.note("exponent pairs differ: the product is not a hypersurface")
        return None, "not a hypersurface"
    return _form_record(r), format_poly(r.poly())


def cmd_power(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1))
    ctx.inputs.update(poly=a.poly, r=a.r)
    r = bn.binomial_power(_binomial(f), a.r)
    return _form_record(r), format_poly(r.poly())


def cmd_type(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1))
    ctx.inputs["poly"] = a.poly
    ty = bn.detect_type(_binomial(f))
    if ty is None:
        ctx.note("coefficient ratio is not a root of unity")
        return None, "none"
    return _type_record(ty), f"({ty.t},{ty.epsilon})"


def cmd_min_exponent(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1))
    ctx.inputs["poly"] = a.poly
    r = bn.min_idempotent_exponent(_binomial(f))
    if r is None:
        ctx.note("coefficient ratio is not a root of unity: no power is idempotent")
        return None, "none"
    return r, str(r)


def _target(ctx: Context, texts: List[str], as_union: bool):
    fs = ctx.polys(texts)
    if as_union:
        return bn.HypersurfaceUnion(tuple(_component(f) for f in fs))
    if len(fs) == 1:
        return _binomial(fs[0])
    return bn.BinomialVariety(tuple(_binomial(f) for f in fs))


def cmd_idempotent(ctx: Context):
    a = ctx.args
    texts = _require(a.poly, "poly")
    ctx.inputs.update(poly=texts, t=a.t, union=a.union)
    V = _target(ctx, texts, a.union)
    r = bn.is_idempotent(V, a.t)
    witness = None
    if isinstance(V, bn.BinomialForm):
        witness = bn.min_idempotent_exponent(V)
    elif isinstance(V, bn.BinomialVariety):
        ve = bn.variety_min_exponent(V, verify=False)
        witness = ve.exponent if ve else None
    return {"verdict": r, "t": a.t, "witness_exponent": witness}, str(r).lower()


def cmd_union_power(ctx: Context):
    a = ctx.args
    texts = _require(a.poly, "poly")
    ctx.inputs.update(poly=texts, r=a.r, label=a.label)
    U = _target(ctx, texts, True)
    res = bn.union_power(U, a.r)
    comps = []
    parts = res.union.parts()
    if a.label:
        parts.sort(key=lambda c: (bn.cyclic_label(c, a.label) or 0) if isinstance(c, bn.BinomialForm) else -1)
    for c in parts:
        rec = {"component": _component_str(c)}
        if a.label and isinstance(c, bn.BinomialForm):
            rec["label"] = bn.cyclic_label(c, a.label)
        comps.append(rec)
    rec = {
        "components": comps,
        "lower_dimensional": [str(s) for s in res.lower_dimensional],
        "conditions_hold": res.conditions_hold,
        "idempotent": res.idempotent,
    }
    if a.label:
        text = " + ".join(f"C{c.get('label')}" if "label" in c else c["component"] for c in comps)
    else:
        text = " + ".join(c["component"] if c["component"].startswith("H") else f"Z({c['component']})"
                          for c in comps)
    if res.lower_dimensional:
        text += "  [lower-dimensional: " + ", ".join(rec["lower_dimensional"]) + "]"
    return rec, text


def cmd_coord_product(ctx: Context):
    a = ctx.args
    idx = _require(a.index, "index")
    ctx.inputs["index"] = idx
    s = bn.coordinate_product([bn.CoordinateHyperplane(i) for i in idx])
    return {"indices": list(s.indices), "subspace": str(s)}, str(s)


def cmd_table(ctx: Context):
    m = ctx.args.order
    ctx.inputs["order"] = m
    table = bn.multiplication_table(m)
    width = len(f"C{m}") + 1
    head = " " * width + "|" + "|".join(f"C{k}".center(width) for k in range(1, m + 1)) + "|"
    lines = [head]
    for j, row in enumerate(table, start=1):
        lines.append(f"C{j}".ljust(width) + "|" + "|".join(f"C{v}".center(width) for v in row) + "|")
    return {"order": m, "table": table}, "\n".join(lines)


def cmd_variety_exponent(ctx: Context):
    a = ctx.args
    fs = ctx.polys(_require(a.poly, "poly"))
    ctx.inputs["poly"] = a.poly
    V = bn.BinomialVariety(tuple(_binomial(f) for f in fs))
    r = bn.variety_min_exponent(V, verify=not a.no_verify)
    if r is None:
        ctx.note("some generator ratio is not a root of unity")
        return None, "none"
    if r.formula_exponent != r.exponent:
        ctx.note(
            f"lcm(t_i/gcd(t_i,eps_i)) + 1 gives {r.formula_exponent}; order-based value is {r.exponent}"
        )
    rec = {"exponent": r.exponent, "orders": list(r.orders), "types": [_type_record(t) for t in r.types],
           "formula_exponent": r.formula_exponent, "verified": r.verified}
    return rec, f"{r.exponent}  (formula value {r.formula_exponent}, verified={r.verified})"


def cmd_pure_difference(ctx: Context):
    a = ctx.args
    fs = ctx.polys(_require(a.poly, "poly"))
    ctx.inputs["poly"] = a.poly
    V = bn.BinomialVariety(tuple(_binomial(f) for f in fs))
    r = bn.is_pure_difference_ideal(V)
    return r, str(r).lower()


def cmd_sample(ctx: Context):
    a = ctx.args
    f, = ctx.polys(_require(a.poly, "poly", 1))
    ctx.inputs.update(poly=a.poly, count=a.count, seed=a.seed)
    C = _binomial(f)
    pts = numeric.sample_on_binomial(C, a.count, a.seed)
    out = [[[round(z.real, 12), round(z.imag, 12)] for z in p.coords] for p in pts]
    text = "\n".join("[" + " : ".join(f"{z.real:.6g}{z.imag:+.6g}i" for z in p.coords) + "]" for p in pts)
    return {"points": out}, text


def cmd_verify(ctx: Context):
    a = ctx.args
    texts = _require(a.poly, "poly", 2 if a.kind == "product" else 1)
    claim = _require([a.claim] if a.claim else [], "claim")[0]
    *fs, E = ctx.polys(texts + [claim])
    ctx.inputs.update(kind=a.kind, poly=texts, claim=claim, samples=a.samples, seed=a.seed, tol=a.tol, r=a.r)
    if a.kind == "product":
        rep = numeric.verify_product_claim(_binomial(fs[0]), _binomial(fs[1]), E, a.samples, a.seed, a.tol)
    else:
        rep = numeric.verify_power_claim(_binomial(fs[0]), a.r, E, a.samples, a.seed, a.tol)
    if rep.vacuous:
        ctx.note("no samples drawn: vacuous pass")
    text = f"{'pass' if rep.verdict else 'fail'}  max_residual={rep.max_residual:.3e}  tol={rep.tolerance:g}  samples={rep.sample_count}"
    return rep.to_dict(), text


# subcommand -> (handler, help)
COMMANDS: Dict[str, tuple] = {
    "parse-check": (cmd_parse_check, "parse polynomials; print canonical form, degree, leading term"),
    "arith": (cmd_arith, "add, subtract, multiply or scale polynomials"),
    "evaluate": (cmd_evaluate, "evaluate a polynomial at a point representative"),
    "coprime": (cmd_coprime, "test whether two monomials share no variable"),
    "number": (cmd_number, "evaluate a coefficient expression: value, order, complex embedding"),
    "cyclotomic": (cmd_cyclotomic, "print the n-th cyclotomic polynomial"),
    "normal-form": (cmd_normal_form, "remainder of a polynomial modulo generators"),
    "groebner": (cmd_groebner, "reduced Groebner basis, or --check an existing basis"),
    "ideal-equal": (cmd_ideal_equal, "compare two ideals"),
    "eliminate": (cmd_eliminate, "intersect an ideal with a subring of kept variables"),
    "star": (cmd_star, "Hadamard product of two varieties by elimination"),
    "star-points": (cmd_star_points, "Hadamard product of two points"),
    "delta": (cmd_delta, "Delta stratum level of a point"),
    "invert": (cmd_invert, "the point 1/P"),
    "quotient": (cmd_quotient, "Q/P = Q * (1/P) with its Delta level"),
    "transform": (cmd_transform, "Hadamard transformation of polynomials by a point"),
    "classify": (cmd_classify, "recognize a binomial hypersurface"),
    "product": (cmd_product, "closed-form Hadamard product of two binomials"),
    "power": (cmd_power, "closed-form Hadamard power of a binomial"),
    "type": (cmd_type, "type (t, epsilon) of a binomial"),
    "min-exponent": (cmd_min_exponent, "minimal idempotency exponent of a binomial"),
    "idempotent": (cmd_idempotent, "decide V^{*t} = V for a binomial, variety or --union"),
    "union-power": (cmd_union_power, "power of a union of binomials and coordinate hyperplanes"),
    "coord-product": (cmd_coord_product, "product of coordinate hyperplanes"),
    "table": (cmd_table, "Hadamard multiplication table of X^I1 - zeta^j X^I2"),
    "variety-exponent": (cmd_variety_exponent, "minimal idempotency exponent of a binomial variety"),
    "pure-difference": (cmd_pure_difference, "are all generators X^a - X^b"),
    "sample": (cmd_sample, "numeric points on a binomial hypersurface"),
    "verify": (cmd_verify, "numeric check of a product or power claim"),
}

# library operation -> the subcommand that exposes it
OPERATIONS: Dict[str, str] = {
    "cyclotomic_polynomial": "cyclotomic",
    "root_of_unity": "number",
    "field_ops": "number",
    "multiplicative_order": "number",
    "complex_embedding": "number",
    "poly_arith": "arith",
    "evaluate": "evaluate",
    "leading_term": "parse-check",
    "monomial_gcd_coprime": "coprime",
    "is_homogeneous": "parse-check",
    "normal_form": "normal-form",
    "buchberger": "groebner",
    "is_groebner_basis": "groebner",
    "ideal_equal": "ideal-equal",
    "eliminate": "eliminate",
    "star_varieties_elim": "star",
    "star_point": "star-points",
    "delta_level": "delta",
    "invert_point": "invert",
    "quotient_point": "quotient",
    "hadamard_transform": "transform",
    "transform_ideal": "transform",
    "classify_binomial": "classify",
    "binomial_product": "product",
    "binomial_power": "power",
    "detect_type": "type",
    "min_idempotent_exponent": "min-exponent",
    "is_idempotent": "idempotent",
    "union_power": "union-power",
    "coordinate_product": "coord-product",
    "multiplication_table": "table",
    "variety_min_exponent": "variety-exponent",
    "is_pure_difference_ideal": "pure-difference",
    "sample_on_binomial": "sample",
    "verify_product_claim": "verify",
    "verify_power_claim": "verify",
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--vars", type=int, default=None, help="number of variables n+1 (x0..xn)")
    common.add_argument("--poly", action="append", help="polynomial (repeatable)")
    common.add_argument("--point", action="append", help="point such as [1:2:4] (repeatable)")

    ordered = _Parser(add_help=False)
    ordered.add_argument("--order", choices=["lex", "grevlex", "grlex"], default=None)

    parser = _Parser(prog="hadamard-varieties", description="Hadamard products and powers of projective hypersurfaces")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, *parents):
        return sub.add_parser(name, parents=[common, *parents], help=COMMANDS[name][1])

    add("parse-check", ordered)
    p = add("arith")
    p.add_argument("--op", choices=["add", "sub", "mul", "scale"], required=True)
    p.add_argument("--scalar")
    add("evaluate")
    p = add("coprime")
    p.add_argument("--i1", required=True)
    p.add_argument("--i2", required=True)
    p = add("number")
    p.add_argument("--value", required=True)
    p = add("cyclotomic")
    p.add_argument("--n", type=int, required=True)
    p = add("normal-form", ordered)
    p.add_argument("--gen", action="append")
    p = add("groebner", ordered)
    p.add_argument("--gen", action="append")
    p.add_argument("--check", action="store_true")
    p = add("ideal-equal", ordered)
    p.add_argument("--gen-a", action="append")
    p.add_argument("--gen-b", action="append")
    p = add("eliminate")
    p.add_argument("--gen", action="append")
    p.add_argument("--keep", required=True, help="comma-separated variable indices to keep")
    p = add("star")
    p.add_argument("--gen-a", action="append")
    p.add_argument("--gen-b", action="append")
    for name in ("star-points", "delta", "invert", "quotient"):
        add(name)
    p = add("transform", ordered)
    p.add_argument("--groebner", action="store_true", help="declare the input polynomials a Groebner basis")
    for name in ("classify", "product", "type", "min-exponent", "variety-exponent", "pure-difference"):
        p = add(name)
        if name == "variety-exponent":
            p.add_argument("--no-verify", action="store_true")
    p = add("power")
    p.add_argument("--r", type=int, required=True)
    p = add("idempotent")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--union", action="store_true", help="treat the polynomials as components of a union")
    p = add("union-power")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--label", type=int, default=None, help="label components C_j by zeta_m^j")
    p = add("coord-product")
    p.add_argument("--index", type=int, action="append")
    p = add("table")
    p.add_argument("--order", type=int, required=True, help="size t-1 of the table")
    p = add("sample")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p = add("verify")
    p.add_argument("--kind", choices=["product", "power"], required=True)
    p.add_argument("--claim", help="claimed equation E")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


def _emit(fmt: str, record: dict, text: Optional[str], out) -> None:
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif text is not None:
        out.write(text + "\n")


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Execute one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    fmt = "json" if "--format=json" in argv or any(
        a == "--format" and i + 1 < len(argv) and argv[i + 1] == "json" for i, a in enumerate(argv)
    ) else "text"
    command = argv[0] if argv else None
    record = {"command": command, "inputs": {}, "result": None, "diagnostics": []}
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise _ArgError("a subcommand is required")
        ctx = Context(args)
        record["inputs"] = ctx.inputs
        handler = COMMANDS[args.command][0]
        result, text = handler(ctx)
        record.update(inputs=ctx.inputs, result=result, diagnostics=ctx.diagnostics)
        _emit(fmt, record, text, out)
        if fmt == "text":
            for d in ctx.diagnostics:
                err.write(f"note: {d['message']}\n")
        return EXIT_OK
    except ParseError as e:
        error = {"level": "error", "kind": "parse", "message": str(e), "position": e.position,
                 "expected": sorted(e.expected)}
        code = EXIT_PARSE
    except _ArgError as e:
        error = {"level": "error", "kind": "usage", "message": str(e)}
        code = EXIT_PARSE
    except DOMAIN_ERRORS as e:
        error = {"level": "error", "kind": "domain", "type": type(e).__name__, "message": str(e)}
        code = EXIT_DOMAIN
    record["diagnostics"].append(error)
    if fmt == "json":
        _emit(fmt, record, None, out)
    else:
        err.write(f"error: {error['message']}\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
