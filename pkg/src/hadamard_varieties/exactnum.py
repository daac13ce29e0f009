"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Rationals are plain :class:`fractions.Fraction` values.  A
:class:`CyclotomicNumber` stores an element of Q(zeta_N) in the power basis
``1, z, ..., z^(phi(N)-1)`` reduced modulo the N-th cyclotomic polynomial, so
two values at the same conductor are equal iff their coefficient tuples are.
Binary operations first embed both operands into the conductor
``lcm(N_a, N_b)``.

Here ``zeta_N`` always means ``exp(2*pi*i/N)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Optional, Sequence, Tuple, Union

Rational = Fraction

Scalar = Union[int, Fraction, "CyclotomicNumber"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# integer-coefficient univariate helpers (coefficient lists, low degree first)


def _poly_divmod_int(num: Sequence[int], den: Sequence[int]) -> Tuple[list, list]:
    """Exact division of integer polynomials with monic ``den``."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    rem = num[:dd] or [0]
    return quot, rem


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divisors(n: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Return the coefficients of Phi_n, constant term first.

    Computed as ``(x^n - 1)`` divided exactly by ``Phi_d`` for every proper
    divisor ``d`` of ``n``.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in _divisors(n)[:-1]:
        den = _poly_mul_int(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod_int(num, den)
    assert not any(rem), "x^n - 1 must be divisible by its proper cyclotomic factors"
    return tuple(quot)


@lru_cache(maxsize=None)
def _power_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Row ``j`` holds ``x^j mod Phi_n`` for ``0 <= j < n``."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce using x^deg = -sum(phi[:deg] x^k)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for k in range(deg):
                cur[k] -= top * phi[k]
    return tuple(rows)


def _reduce(n: int, exps: dict) -> Tuple[Fraction, ...]:
    """Fold a map ``{j mod n: coeff}`` into the power basis of Q(zeta_n)."""
    table = _power_table(n)
    deg = len(table[0])
    out = [_ZERO] * deg
    for j, c in exps.items():
        if not c:
            continue
        if j < deg:
            out[j] += c
            continue
        for k, t in enumerate(table[j]):
            if t:
                out[k] += c * t
    return tuple(out)


# ---------------------------------------------------------------------------
# linear algebra over Q, only for span membership and inverses


def _solve(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[list]:
    """Solve ``sum x_k * columns[k] = rhs``; None when inconsistent."""
    m = len(rhs)
    k = len(columns)
    rows = [[Fraction(columns[c][r]) for c in range(k)] + [Fraction(rhs[r])] for r in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(rows[i][k] for i in range(r, m)):
        return None
    sol = [_ZERO] * k
    for i, c in enumerate(pivots):
        sol[c] = rows[i][k]
    return sol


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class CyclotomicNumber:
    """An exact element of Q(zeta_N).

    Instances are immutable.  ``coeffs[k]`` is the coefficient of
    ``zeta_N^k`` in the reduced power basis.
    """

    __slots__ = ("conductor", "coeffs", "_canon")

    def __init__(self, conductor: int, coeffs: Sequence = ()):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        deg = euler_phi(conductor)
        cs = [_to_fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(_reduce(conductor, _accumulate(cs, conductor)))
        cs += [_ZERO] * (deg - len(cs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_canon", None)

    @classmethod
    def _raw(cls, conductor: int, coeffs: Tuple[Fraction, ...]) -> "CyclotomicNumber":
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_canon", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "CyclotomicNumber":
        return cls._raw(1, (_to_fraction(value),))

    @classmethod
    def coerce(cls, value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        return cls.rational(value)

    # -- structure ----------------------------------------------------------

    def embed(self, m: int) -> "CyclotomicNumber":
        """Return the same value written at conductor ``m`` (a multiple of N)."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed conductor {n} into {m}")
        step = m // n
        exps = {}
        for k, c in enumerate(self.coeffs):
            if c:
                exps[(k * step) % m] = c
        return CyclotomicNumber._raw(m, _reduce(m, exps))

    def canonical(self) -> "CyclotomicNumber":
        """Rewrite at the smallest conductor whose field contains the value."""
        if self._canon is not None:
            return self._canon
        n = self.conductor
        result = self
        if n > 1:
            for m in _divisors(n)[:-1]:
                cols = [CyclotomicNumber._raw(m, _unit_vector(m, k)).embed(n).coeffs for k in range(euler_phi(m))]
                sol = _solve(cols, self.coeffs)
                if sol is not None:
                    result = CyclotomicNumber._raw(m, tuple(sol))
                    break
        object.__setattr__(self, "_canon", result)
        object.__setattr__(result, "_canon", result)
        return result

    def is_rational(self) -> bool:
        return self.canonical().conductor == 1

    def to_fraction(self) -> Fraction:
        c = self.canonical()
        if c.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return c.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        cs = self.coeffs
        return cs[0] == 1 and not any(cs[1:])

    # -- arithmetic ---------------------------------------------------------

    def _common(self, other) -> Tuple["CyclotomicNumber", "CyclotomicNumber"]:
        other = CyclotomicNumber.coerce(other)
        if self.conductor == other.conductor:
            return self, other
        m = math.lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber._raw(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return CyclotomicNumber.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.conductor, tuple(x * other for x in self.coeffs))
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        n = a.conductor
        if n == 1:
            return CyclotomicNumber._raw(1, (a.coeffs[0] * b.coeffs[0],))
        if b.coeffs[0] and not any(b.coeffs[1:]):
            s = b.coeffs[0]
            return CyclotomicNumber._raw(n, tuple(x * s for x in a.coeffs))
        exps: dict = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    k = (i + j) % n
                    exps[k] = exps.get(k, _ZERO) + x * y
        return CyclotomicNumber._raw(n, _reduce(n, exps))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("attempt to invert 0 in a cyclotomic field")
        n = self.conductor
        if n == 1:
            return CyclotomicNumber._raw(1, (1 / self.coeffs[0],))
        deg = len(self.coeffs)
        # columns of the multiplication-by-self matrix
        cols = []
        for k in range(deg):
            shifted = CyclotomicNumber._raw(n, _reduce(n, {(i + k) % n: c for i, c in enumerate(self.coeffs) if c}))
            cols.append(shifted.coeffs)
        sol = _solve(cols, _unit_vector(n, 0))
        return CyclotomicNumber._raw(n, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("attempt to invert 0 in a cyclotomic field")
            return CyclotomicNumber._raw(self.conductor, tuple(x / other for x in self.coeffs))
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = CyclotomicNumber._raw(self.conductor, _unit_vector(self.conductor, 0))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        c = self.canonical()
        if c.conductor == 1:
            return hash(c.coeffs[0])
        return hash((c.conductor, c.coeffs))

    def __complex__(self):
        return complex_embedding(self)

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .parsing import format_number

        return format_number(self)


def _accumulate(cs: Sequence[Fraction], n: int) -> dict:
    out: dict = {}
    for j, c in enumerate(cs):
        if c:
            out[j % n] = out.get(j % n, _ZERO) + c
    return out


@lru_cache(maxsize=None)
def _unit_vector(n: int, j: int) -> Tuple[Fraction, ...]:
    return _reduce(n, {j % n: _ONE})


def as_cyclotomic(x: Scalar) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(x)


ZERO = CyclotomicNumber.rational(0)
ONE = CyclotomicNumber.rational(1)


def root_of_unity(d: int, k: int = 1) -> CyclotomicNumber:
    """Return ``zeta_d^k`` with ``zeta_d = exp(2*pi*i/d)``."""
    if d < 1:
        raise ValueError(f"root of unity order must be >= 1, got {d}")
    return CyclotomicNumber._raw(d, _unit_vector(d, k % d))


@dataclass(frozen=True)
class RootOfUnityWitness:
    """Witness that a value equals ``zeta_order^exponent``."""

    order: int
    exponent: int

    @property
    def value(self) -> CyclotomicNumber:
        return root_of_unity(self.order, self.exponent)

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.exponent, self.order) == 1


def complex_embedding(c: Scalar) -> complex:
    """Evaluate at ``zeta_N = exp(2*pi*i/N)``."""
    c = as_cyclotomic(c)
    n = c.conductor
    total = 0j
    for k, a in enumerate(c.coeffs):
        if a:
            total += float(a) * cmath.exp(2j * math.pi * k / n)
    return total


def multiplicative_order(c: Scalar) -> Optional[int]:
    """Least ``k >= 1`` with ``c^k = 1``, or None if ``c`` is not a root of unity.

    Only divisors of ``lcm(2, N)`` can occur: the torsion units of Q(zeta_N)
    are exactly ``+-zeta_N^j``.
    """
    c = as_cyclotomic(c)
    if c.is_zero():
        raise ValueError("multiplicative order of 0 is undefined")
    c = c.canonical()
    if abs(abs(complex_embedding(c)) - 1.0) > 1e-9:
        return None
    for k in _divisors(math.lcm(2, c.conductor)):
        if (c ** k).is_one():
            return k
    return None


def root_of_unity_witness(c: Scalar) -> Optional[RootOfUnityWitness]:
    """Return ``(d, k)`` with ``c = zeta_d^k``, ``d`` the order and ``gcd(k, d) = 1``."""
    d = multiplicative_order(c)
    if d is None:
        return None
    c = as_cyclotomic(c)
    z = root_of_unity(d, 1)
    power = ONE
    for k in range(d):
        if power == c:
            return RootOfUnityWitness(d, k)
        power = power * z
    raise AssertionError("element of finite order not found among powers of zeta_d")
