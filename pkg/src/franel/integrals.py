"""Exact integrals over [0, 1] of products of periodic Bernoulli functions
B~_k(a_1 x) B~_k(a_2 x) ... B~_k(a_m x).

On every open cell between consecutive points j/a_i the integrand is a
polynomial, so the integral is a finite sum of antiderivative differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import _kernels
from .arith import (
    RationalPolynomial,
    UsageError,
    poly_antiderivative,
    poly_denominator,
    poly_eval,
    poly_mul,
    poly_substitute_linear,
    rational_floor,
)
from .bernoulli import TABLE

__all__ = [
    "IntegralSpec",
    "breakpoints",
    "piece_polynomial",
    "franel_integral",
    "franel_integral_normalized",
]


@dataclass(frozen=True)
class IntegralSpec:
    index: int
    multipliers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multipliers", tuple(int(a) for a in self.multipliers))
        if self.index < 1:
            raise UsageError(f"Bernoulli index must be >= 1, got {self.index}")
        if not self.multipliers:
            raise UsageError("at least one multiplier is required")
        if any(a < 1 for a in self.multipliers):
            raise UsageError(f"multipliers must be positive, got {self.multipliers}")


def breakpoints(spec: IntegralSpec) -> tuple[Fraction, ...]:
    """Sorted, deduplicated points j/a_i in [0, 1]."""
    pts = {Fraction(j, a) for a in set(spec.multipliers) for j in range(a + 1)}
    return tuple(sorted(pts))


def piece_polynomial(spec: IntegralSpec, left, right) -> RationalPolynomial:
    """The integrand on the open cell (left, right) as a polynomial."""
    left, right = Fraction(left), Fraction(right)
    if left >= right:
        raise UsageError(f"empty cell ({left}, {right})")
    mid = (left + right) / 2
    base = TABLE.polynomial(spec.index)
    poly = RationalPolynomial.constant(1)
    for a in spec.multipliers:
        poly = poly_mul(poly, poly_substitute_linear(base, a, rational_floor(a * mid)))
    return poly


def _integral_rational(spec: IntegralSpec) -> Fraction:
    pts = breakpoints(spec)
    total = Fraction(0)
    for left, right in zip(pts, pts[1:]):
        F = poly_antiderivative(piece_polynomial(spec, left, right))
        total += poly_eval(F, right) - poly_eval(F, left)
    return total


def _integral_kernel(spec: IntegralSpec) -> Fraction:
    # x = t / L puts every breakpoint on an integer t in [0, L]
    base = TABLE.polynomial(spec.index)
    d = poly_denominator(base)
    coeffs = [int(c * d) for c in base.coeffs]
    k = spec.index
    m = len(spec.multipliers)
    L = math.lcm(*spec.multipliers)
    ts = sorted({j * (L // a) for a in set(spec.multipliers) for j in range(a + 1)})
    deg = m * k
    D = reduce(math.lcm, range(1, deg + 2), 1)
    weights = [D // (j + 1) for j in range(deg + 1)]
    S = _kernels.cell_sum(coeffs, list(spec.multipliers), ts, L, weights)
    return Fraction(S, D * L * (d * L**k) ** m)


def franel_integral(spec: IntegralSpec, method: str = "kernel") -> Fraction:
    """Exact value of the integral described by ``spec``.

    ``method="kernel"`` runs the scaled-integer cell loop (compiled when
    available); ``method="rational"`` builds every cell polynomial from
    Fractions with substitution and multiplication. Both are exact and
    agree; the second is the slow reference path.
    """
    if method == "kernel":
        return _integral_kernel(spec)
    if method == "rational":
        return _integral_rational(spec)
    raise UsageError(f"unknown method {method!r}")


def franel_integral_normalized(spec: IntegralSpec) -> Fraction:
    """Like :func:`franel_integral`, but divides the multipliers by their gcd
    first when that is known to leave the value unchanged (odd index, even
    number of factors)."""
    g = math.gcd(*spec.multipliers)
    if g > 1 and spec.index % 2 == 1 and len(spec.multipliers) % 2 == 0:
        spec = IntegralSpec(spec.index, tuple(a // g for a in spec.multipliers))
    return franel_integral(spec)
