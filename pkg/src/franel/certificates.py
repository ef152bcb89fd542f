"""Integrality certificates: theorem multipliers built from gcd products,
and verdicts on multiplier * integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arith import UsageError
from .bernoulli import general_constant_B, higher_constants
from .integrals import IntegralSpec, franel_integral

__all__ = [
    "TheoremKind",
    "CertificateReport",
    "gcd_product",
    "gcd_quotient",
    "multiplier",
    "certificate",
    "sharpness_check",
    "DISPLAYED_K3_CONSTANT",
]

# A frequently quoted k = 3 constant, as opposed to the
# value lcm(2^6 * 105, 6 * 6) = 20160 that the general formula yields.
DISPLAYED_K3_CONSTANT = 4032


@dataclass(frozen=True)
class TheoremKind:
    """``name`` is one of ``mcintosh4``, ``general_even``, ``higher``."""

    name: str
    k: int = 1
    n: int = 1

    def __post_init__(self):
        if self.name not in ("mcintosh4", "general_even", "higher"):
            raise UsageError(f"unknown theorem kind {self.name!r}")
        if self.k < 1 or self.n < 1:
            raise UsageError(f"k and n must be >= 1, got k={self.k}, n={self.n}")

    @classmethod
    def mcintosh4(cls) -> TheoremKind:
        return cls("mcintosh4", 2, 2)

    @classmethod
    def general_even(cls, k: int) -> TheoremKind:
        return cls("general_even", k, 1)

    @classmethod
    def higher(cls, k: int, n: int) -> TheoremKind:
        return cls("higher", k, n)

    @property
    def tuple_length(self) -> int:
        if self.name == "mcintosh4":
            return 4
        if self.name == "general_even":
            return 2 * self.k
        return 2 * self.n

    @property
    def index(self) -> int:
        """Bernoulli index of every factor in the integral."""
        return 2 * self.k + 1 if self.name == "higher" else 1

    def check(self, tup) -> tuple[int, ...]:
        tup = tuple(int(a) for a in tup)
        if len(tup) != self.tuple_length:
            raise UsageError(
                f"{self} needs a {self.tuple_length}-tuple, got {len(tup)} entries"
            )
        if any(a < 1 for a in tup):
            raise UsageError(f"entries must be positive, got {tup}")
        return tup

    def __str__(self) -> str:
        if self.name == "mcintosh4":
            return "mcintosh4"
        if self.name == "general_even":
            return f"general_even(k={self.k})"
        return f"higher(k={self.k}, n={self.n})"


@dataclass(frozen=True)
class CertificateReport:
    spec: IntegralSpec
    multiplier: Fraction
    integral: Fraction
    product: Fraction
    is_integer: bool
    constant_part: int
    gcd_part_num: int
    gcd_part_den: int


def gcd_product(m: int, tup) -> int:
    """X_m: product of gcds over all m-element index subsets."""
    if not 1 <= m <= len(tup):
        raise UsageError(f"m must lie in 1..{len(tup)}, got {m}")
    return math.prod(math.gcd(*sub) for sub in combinations(tup, m))


def gcd_quotient(tup) -> Fraction:
    """X_1^(l-1) X_3^(l-3) ... X_(l-1) / (X_2^2 X_4^4 ... X_l^l), l = len(tup) even."""
    size = len(tup)
    num = math.prod(gcd_product(j, tup) ** (size - j) for j in range(1, size, 2))
    den = math.prod(gcd_product(j, tup) ** j for j in range(2, size + 1, 2))
    return Fraction(num, den)


def _constant(kind: TheoremKind) -> int:
    if kind.name == "mcintosh4":
        return 240
    if kind.name == "general_even":
        k = kind.k
        odd = math.prod(2 * j + 1 for j in range(1, k + 1))
        return math.lcm(2 ** (2 * k) * odd, 2 * k * general_constant_B(2 * k))
    return higher_constants(kind.k, kind.n)[1]


def _split(kind: TheoremKind, tup) -> tuple[int, Fraction]:
    tup = kind.check(tup)
    quotient = gcd_quotient(tup)
    if kind.name == "higher":
        quotient = quotient ** (2 * kind.k + 1)
    return _constant(kind), quotient


def multiplier(kind: TheoremKind, tup) -> Fraction:
    if kind.name == "mcintosh4":
        a, b, c, e = kind.check(tup)
        g = math.gcd
        x3 = g(a, b, c) * g(a, b, e) * g(a, c, e) * g(b, c, e)
        x2 = g(a, b) * g(a, c) * g(a, e) * g(b, c) * g(b, e) * g(c, e)
        x4 = g(a, b, c, e)
        return Fraction(240 * (a * b * c * e) ** 3 * x3, x2**2 * x4**4)
    const, quotient = _split(kind, tup)
    return const * quotient


def certificate(kind: TheoremKind, tup) -> CertificateReport:
    tup = kind.check(tup)
    const, quotient = _split(kind, tup)
    mult = multiplier(kind, tup)
    spec = IntegralSpec(kind.index, tup)
    value = franel_integral(spec)
    product = mult * value
    return CertificateReport(
        spec=spec,
        multiplier=mult,
        integral=value,
        product=product,
        is_integer=product.denominator == 1,
        constant_part=const,
        gcd_part_num=quotient.numerator,
        gcd_part_den=quotient.denominator,
    )


def sharpness_check(integral, claimed_denominator: int) -> bool:
    return Fraction(integral).denominator == claimed_denominator
