"""Text syntax for numbers, polynomials and projective points.

Grammar (whitespace-insensitive)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := INT | 'z' INT ['^' ['-'] INT] | 'x' INT ['^' INT] | '(' expr ')'
    point   := '[' expr (':' expr)* ']'

``zN`` is ``exp(2*pi*i/N)``.  Division is only allowed by a nonzero
constant.  :func:`format_poly` prints the canonical form (terms in
descending lex order), which parses back to the same polynomial.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from .exactnum import ONE, CyclotomicNumber, as_cyclotomic, root_of_unity
from .multipoly import LEX, MonomialOrder, MultiPoly


class ParseError(ValueError):
    """Malformed input text; carries the offset and the tokens that would fit."""

    def __init__(self, message: str, text: str, position: int, expected: FrozenSet[str] = frozenset()):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
        self.expected = frozenset(expected)


_TOKEN = re.compile(r"(\d+)|(x)(\d+)|(z)(\d+)|([-+*/^():\[\]])")


@dataclass
class _Tok:
    kind: str  # "int", "x", "z", or the punctuation character, or "end"
    value: int
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos,
                             frozenset({"integer", "x<i>", "z<N>", "(", "+", "-"}))
        start = pos
        if m.group(1):
            toks.append(_Tok("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(_Tok("x", int(m.group(3)), start))
        elif m.group(4):
            toks.append(_Tok("z", int(m.group(5)), start))
        else:
            toks.append(_Tok(m.group(6), 0, start))
        pos = m.end()
    toks.append(_Tok("end", 0, n))
    return toks


class _Parser:
    def __init__(self, text: str, arity: Optional[int]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.arity = arity
        self.max_var = -1

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", self.text, tok.pos, frozenset({kind}))
        return self.take()

    def expr(self, stop: FrozenSet[str]):
        terms = []
        tok = self.peek()
        sign = 1
        if tok.kind in ("+", "-"):
            sign = -1 if tok.kind == "-" else 1
            self.take()
        terms.append((sign, self.term()))
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            terms.append((sign, self.term()))
        tok = self.peek()
        if tok.kind not in stop:
            raise ParseError(f"unexpected token {tok.kind!r}", self.text, tok.pos,
                             frozenset({"+", "-", "*", "/"} | stop))
        total = _Expr.zero()
        for s, t in terms:
            total = total.add(t if s > 0 else t.neg())
        return total

    def term(self):
        val = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.kind == "*":
                val = val.mul(rhs)
            else:
                c = rhs.as_constant()
                if c is None:
                    raise ParseError("division by a non-constant", self.text, op.pos, frozenset({"integer", "z<N>"}))
                if c.is_zero():
                    raise ParseError("division by zero", self.text, op.pos, frozenset({"nonzero constant"}))
                val = val.scale(c.inverse())
        return val

    def factor(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return _Expr.const(CyclotomicNumber.rational(tok.value))
        if tok.kind == "z":
            self.take()
            if tok.value < 1:
                raise ParseError("root order must be positive", self.text, tok.pos, frozenset({"z<N> with N >= 1"}))
            k = 1
            if self.peek().kind == "^":
                self.take()
                neg = False
                if self.peek().kind == "-":
                    self.take()
                    neg = True
                k = self.expect("int").value * (-1 if neg else 1)
            return _Expr.const(root_of_unity(tok.value, k))
        if tok.kind == "x":
            self.take()
            k = 1
            if self.peek().kind == "^":
                self.take()
                k = self.expect("int").value
            self.max_var = max(self.max_var, tok.value)
            return _Expr.var(tok.value, k)
        if tok.kind == "(":
            self.take()
            val = self.expr(frozenset({")"}))
            self.expect(")")
            return val
        raise ParseError(f"unexpected token {tok.kind!r}", self.text, tok.pos,
                         frozenset({"integer", "x<i>", "z<N>", "("}))


class _Expr:
    """Arity-free polynomial used during parsing: ``{exponent dict items: coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def const(cls, c):
        return cls({(): c}) if not c.is_zero() else cls({})

    @classmethod
    def var(cls, i, k):
        return cls({((i, k),) if k else (): ONE})

    def as_constant(self) -> Optional[CyclotomicNumber]:
        if not self.terms:
            return CyclotomicNumber.rational(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def add(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out[m] + c if m in out else c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return _Expr(out)

    def neg(self):
        return _Expr({m: -c for m, c in self.terms.items()})

    def scale(self, c):
        return _Expr({m: v * c for m, v in self.terms.items()})

    def mul(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                d = dict(m1)
                for i, k in m2:
                    d[i] = d.get(i, 0) + k
                m = tuple(sorted(d.items()))
                s = out[m] + c1 * c2 if m in out else c1 * c2
                out[m] = s
        return _Expr({m: c for m, c in out.items() if not c.is_zero()})

    def to_poly(self, arity: int) -> MultiPoly:
        terms = {}
        for m, c in self.terms.items():
            e = [0] * arity
            for i, k in m:
                e[i] += k
            terms[tuple(e)] = c
        return MultiPoly(arity, terms)


def parse_poly(text: str, arity: Optional[int] = None) -> MultiPoly:
    """Parse a polynomial in ``x0..xn``; ``arity`` defaults to the largest index + 1."""
    p = _Parser(text, arity)
    e = p.expr(frozenset({"end"}))
    if arity is None:
        arity = max(p.max_var + 1, 1)
    elif p.max_var >= arity:
        raise ParseError(f"variable x{p.max_var} outside x0..x{arity - 1}", text, 0,
                         frozenset(f"x{i}" for i in range(arity)))
    return e.to_poly(arity)


def parse_number(text: str) -> CyclotomicNumber:
    p = _Parser(text, 0)
    e = p.expr(frozenset({"end"}))
    c = e.as_constant()
    if c is None:
        raise ParseError("expected a constant, found variables", text, 0, frozenset({"integer", "z<N>"}))
    return c


def parse_point(text: str) -> List[CyclotomicNumber]:
    """Parse ``[a0:a1:...:an]`` into a coordinate list."""
    p = _Parser(text, 0)
    p.expect("[")
    coords = []
    while True:
        e = p.expr(frozenset({":", "]"}))
        c = e.as_constant()
        if c is None:
            raise ParseError("point coordinates must be constants", text, p.peek().pos, frozenset({"integer", "z<N>"}))
        coords.append(c)
        if p.take().kind == "]":
            break
    p.expect("end")
    return coords


def parse_exponent(text: str) -> Tuple[int, ...]:
    """Parse ``1,0,2`` or ``(1,0,2)`` or ``[1,0,2]`` into an exponent tuple."""
    body = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise ParseError("exponent vector must be comma-separated integers", text, 0, frozenset({"integer"}))


# ---------------------------------------------------------------------------
# printing


def _root_forms(c: CyclotomicNumber) -> Optional[Tuple[Fraction, int, int]]:
    """Write ``c = q * zeta_d^k`` with ``q > 0``-or-signed rational.

    Returns ``(q, d, k)`` preferring the smallest ``k`` then ``d``, or None
    when ``c`` is not a rational multiple of a root of unity.
    """
    c = c.canonical()
    if c.conductor == 1:
        return (c.coeffs[0], 1, 0)
    m = math.lcm(2, c.conductor)
    z_inv = root_of_unity(m, -1)
    w = c
    best = None
    for j in range(m):
        if j:
            w = w * z_inv
        if w.coeffs[0] and not any(w.coeffs[1:]):
            q = w.coeffs[0]
            for sign, jj in ((1, j), (-1, (j + m // 2) % m)):
                g = math.gcd(jj, m)
                d, k = m // g, jj // g
                cand = (k, d, sign * q)
                if best is None or cand[:2] < best[:2]:
                    best = cand
            break
    if best is None:
        return None
    k, d, q = best
    return (q, d, k)


def _root_str(d: int, k: int) -> str:
    return f"z{d}" if k == 1 else f"z{d}^{k}"


def _power_basis_str(c: CyclotomicNumber) -> str:
    c = c.canonical()
    parts = []
    for k, a in enumerate(c.coeffs):
        if not a:
            continue
        if k == 0:
            parts.append((a < 0, str(abs(a))))
            continue
        mono = _root_str(c.conductor, k)
        body = mono if abs(a) == 1 else f"{abs(a)}*{mono}"
        parts.append((a < 0, body))
    return _join(parts) if parts else "0"


def _join(parts) -> str:
    out = []
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _coeff_parts(c: CyclotomicNumber) -> Tuple[bool, Optional[str]]:
    """Split a coefficient into (negative, body); body None means magnitude 1."""
    form = _root_forms(c)
    if form is None:
        return False, f"({_power_basis_str(c)})"
    q, d, k = form
    neg = q < 0
    q = abs(q)
    if k == 0:
        return neg, None if q == 1 else str(q)
    root = _root_str(d, k)
    return neg, root if q == 1 else f"{q}*{root}"


def format_number(c) -> str:
    c = as_cyclotomic(c)
    if c.is_zero():
        return "0"
    form = _root_forms(c)
    if form is None:
        return _power_basis_str(c)
    neg, body = _coeff_parts(c)
    return ("-" if neg else "") + (body or "1")


def format_monomial(e) -> str:
    return "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k)


def format_poly(f: MultiPoly, order: MonomialOrder = LEX) -> str:
    """Canonical text: descending terms under ``order`` (lex by default)."""
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.sorted_terms(order):
        mono = format_monomial(e)
        neg, body = _coeff_parts(c)
        if not mono:
            parts.append((neg, body or "1"))
        elif body is None:
            parts.append((neg, mono))
        else:
            parts.append((neg, f"{body}*{mono}"))
    return _join(parts)


def format_point(coords) -> str:
    return "[" + ":".join(format_number(c) for c in getattr(coords, "coords", coords)) + "]"
