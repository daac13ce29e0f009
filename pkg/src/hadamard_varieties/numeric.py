"""Floating-point cross-check of closed-form Hadamard products and powers.

Points are sampled on binomial hypersurfaces over C, multiplied
coordinatewise, and a claimed equation is evaluated on the products.  The
residual is relative: ``|E(p)|`` divided by the largest ``|term|`` of ``E``
at ``p``, so it does not depend on how the point or ``E`` is scaled.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import List, Sequence

import numpy as np

from .binomial import BinomialForm
from .exactnum import complex_embedding
from .multipoly import MultiPoly

MAX_RETRIES = 10


class SamplingError(RuntimeError):
    """Could not produce a defined Hadamard product within the retry cap."""


@dataclass(frozen=True)
class NumericPoint:
    """Complex coordinates, rescaled so the largest modulus is 1."""

    coords: np.ndarray

    @classmethod
    def normalized(cls, coords) -> "NumericPoint":
        coords = np.asarray(coords, dtype=complex)
        m = np.max(np.abs(coords))
        if m == 0:
            raise ValueError("all coordinates vanish")
        return cls(coords / m)

    def star(self, other: "NumericPoint") -> "NumericPoint":
        return NumericPoint.normalized(self.coords * other.coords)


@dataclass(frozen=True)
class ResidualReport:
    sample_count: int
    max_residual: float
    tolerance: float
    verdict: bool

    @property
    def vacuous(self) -> bool:
        return self.sample_count == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["vacuous"] = self.vacuous
        return d


class _CompiledPoly:
    """``E`` as an exponent matrix plus complex coefficients."""

    def __init__(self, f: MultiPoly):
        items = sorted(f.terms.items())
        self.exps = np.array([e for e, _ in items], dtype=int).reshape(len(items), f.arity)
        self.coeffs = np.array([complex_embedding(c) for _, c in items], dtype=complex)

    def terms(self, x: np.ndarray) -> np.ndarray:
        return self.coeffs * np.prod(x[None, :] ** self.exps, axis=1)

    def relative_residual(self, x: np.ndarray) -> float:
        t = self.terms(x)
        scale = np.max(np.abs(t)) if t.size else 0.0
        if scale == 0:
            return 0.0
        return float(abs(t.sum()) / scale)


def relative_residual(f: MultiPoly, point) -> float:
    coords = point.coords if isinstance(point, NumericPoint) else np.asarray(point, dtype=complex)
    return _CompiledPoly(f).relative_residual(coords)


def _annulus(rng: np.random.Generator, size: int) -> np.ndarray:
    # uniform by area on 0.5 <= |z| <= 2
    radius = np.sqrt(rng.uniform(0.25, 4.0, size))
    phase = rng.uniform(0.0, 2 * np.pi, size)
    return radius * np.exp(1j * phase)


def _sample_one(C: BinomialForm, rng: np.random.Generator) -> NumericPoint:
    k = next(i for i, x in enumerate(C.I1) if x)
    e = C.I1[k]
    x = _annulus(rng, C.arity)
    x[k] = 1.0
    rest = np.prod(x ** np.array(C.I1))
    other = np.prod(x ** np.array(C.I2))
    value = complex_embedding(C.alpha2) * other / (complex_embedding(C.alpha1) * rest)
    branch = rng.integers(e)
    x[k] = value ** (1.0 / e) * np.exp(2j * np.pi * branch / e)
    return NumericPoint.normalized(x)


def sample_on_binomial(C: BinomialForm, count: int, seed: int, batch: int = 0) -> List[NumericPoint]:
    """``count`` points of ``C`` with all coordinates nonzero.

    All coordinates but one support variable ``x_k`` of ``I1`` are drawn from
    the annulus; ``x_k^e = value`` is solved by the principal root times a
    uniformly chosen ``e``-th root of unity.  The generator is seeded by
    ``(seed, batch)``.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = np.random.default_rng([seed, batch])
    return [_sample_one(C, rng) for _ in range(count)]


def _star_many(points: Sequence[NumericPoint]) -> NumericPoint:
    out = points[0]
    for p in points[1:]:
        out = out.star(p)
    return out


def _verify(factors: Sequence[BinomialForm], E: MultiPoly, samples: int, seed: int, tol: float) -> ResidualReport:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if samples <= 0:
        return ResidualReport(0, 0.0, tol, True)
    compiled = _CompiledPoly(E)
    rng = np.random.default_rng([seed, 0])
    worst = 0.0
    for _ in range(samples):
        for _attempt in range(MAX_RETRIES):
            pts = [_sample_one(C, rng) for C in factors]
            prod = np.prod(np.stack([p.coords for p in pts]), axis=0)
            if np.any(prod != 0):
                break
        else:
            raise SamplingError(f"no defined product after {MAX_RETRIES} attempts")
        point = NumericPoint.normalized(prod)
        worst = max(worst, compiled.relative_residual(point.coords))
    return ResidualReport(samples, worst, tol, worst <= tol)


def verify_product_claim(C: BinomialForm, D: BinomialForm, E: MultiPoly,
                         samples: int = 200, seed: int = 0, tol: float = 1e-8) -> ResidualReport:
    """Check that ``E`` vanishes on ``P * Q`` for random ``P`` in ``C``, ``Q`` in ``D``."""
    return _verify([C, D], E, samples, seed, tol)


def verify_power_claim(C: BinomialForm, r: int, E: MultiPoly,
                       samples: int = 200, seed: int = 0, tol: float = 1e-8) -> ResidualReport:
    """Check that ``E`` vanishes on products of ``r`` random points of ``C``."""
    if r < 2:
        raise ValueError("power claims need r >= 2")
    return _verify([C] * r, E, samples, seed, tol)
