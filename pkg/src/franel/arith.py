"""Exact integers, rationals and dense univariate rational polynomials.

Rationals are plain :class:`fractions.Fraction` values: they are reduced on
construction, carry a positive denominator and represent zero as ``0/1``.
Polynomials store their coefficients lowest degree first; the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "RationalPolynomial",
    "UsageError",
    "DomainError",
    "gcd_list",
    "lcm_list",
    "poly_substitute_linear",
    "poly_mul",
    "poly_antiderivative",
    "poly_eval",
    "poly_denominator",
    "rational_floor",
    "format_rational",
    "parse_rational",
]


class UsageError(ValueError):
    """Malformed arguments: empty lists, wrong tuple lengths, bad ranges."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


def gcd_list(values: Sequence[int]) -> int:
    if not values:
        raise UsageError("gcd_list needs at least one value")
    if any(v < 1 for v in values):
        raise UsageError(f"gcd_list expects positive integers, got {list(values)}")
    return math.gcd(*values)


def lcm_list(values: Sequence[int]) -> int:
    if not values:
        raise UsageError("lcm_list needs at least one value")
    if any(v < 1 for v in values):
        raise UsageError(f"lcm_list expects positive integers, got {list(values)}")
    return math.lcm(*values)


def rational_floor(r: RationalLike) -> int:
    """Greatest integer <= r (floor division, so -1/3 -> -1)."""
    r = Fraction(r)
    return r.numerator // r.denominator


def _strip(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPolynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> RationalPolynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial(
            tuple(a[i] + b[i] if i < len(b) else a[i] for i in range(len(a)))
        )

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            return poly_mul(self, other)
        return RationalPolynomial(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return RationalPolynomial()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return RationalPolynomial(tuple(out))


def poly_substitute_linear(
    p: RationalPolynomial, c: RationalLike, d: RationalLike
) -> RationalPolynomial:
    """Return q with q(x) = p(c*x - d), expanded by Horner's scheme."""
    lin = RationalPolynomial((-Fraction(d), Fraction(c)))
    result = RationalPolynomial()
    for coeff in reversed(p.coeffs):
        result = poly_mul(result, lin) + RationalPolynomial.constant(coeff)
    return result


def poly_antiderivative(p: RationalPolynomial) -> RationalPolynomial:
    """Antiderivative vanishing at 0."""
    if not p.coeffs:
        return RationalPolynomial()
    return RationalPolynomial(
        (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(p.coeffs))
    )


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_denominator(p: RationalPolynomial) -> int:
    """Smallest N >= 1 with N*p in Z[x]."""
    return reduce(math.lcm, (c.denominator for c in p.coeffs), 1)


def format_rational(r: RationalLike) -> str:
    """Serialize as ``num/den``, integers bare (``-13/6480``, ``3``)."""
    return str(Fraction(r))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts ``n/1``."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise UsageError(f"not a rational: {text!r}") from None
    if d == 0:
        raise UsageError(f"zero denominator: {text!r}")
    return Fraction(n, d)
