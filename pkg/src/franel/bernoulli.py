"""Bernoulli numbers and polynomials, periodic Bernoulli functions,
power sums, the integrality constants built from Bernoulli denominators,
and classical Dedekind sums.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .arith import (
    DomainError,
    RationalPolynomial,
    UsageError,
    poly_denominator,
    poly_eval,
    rational_floor,
)

__all__ = [
    "BernoulliTable",
    "TABLE",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "periodic_bernoulli_eval",
    "sawtooth",
    "power_sum",
    "general_constant_B",
    "higher_constants",
    "dedekind_sum",
]


class BernoulliTable:
    """Append-only memo of Bernoulli numbers B_0, B_1 = -1/2, ... and of
    the polynomials B_n(x).

    Growth happens under a lock; readers only ever see fully built
    prefixes because lists are extended in one assignment.
    """

    def __init__(self):
        self._numbers: list[Fraction] = [Fraction(1)]
        self._polys: dict[int, RationalPolynomial] = {}
        self._lock = threading.Lock()

    def numbers(self, n: int) -> list[Fraction]:
        if n < 0:
            raise UsageError(f"index must be nonnegative, got {n}")
        if len(self._numbers) <= n:
            with self._lock:
                nums = list(self._numbers)
                for m in range(len(nums), n + 1):
                    # sum_{j=0}^{m} C(m+1, j) B_j = 0
                    s = sum(math.comb(m + 1, j) * nums[j] for j in range(m))
                    nums.append(-s / (m + 1))
                if len(nums) > len(self._numbers):
                    self._numbers = nums
        return self._numbers[: n + 1]

    def polynomial(self, n: int) -> RationalPolynomial:
        poly = self._polys.get(n)
        if poly is None:
            nums = self.numbers(n)
            # B_n(x) = sum_j C(n, j) B_j x^(n-j)
            coeffs = [math.comb(n, n - i) * nums[n - i] for i in range(n + 1)]
            poly = RationalPolynomial(tuple(coeffs))
            with self._lock:
                poly = self._polys.setdefault(n, poly)
        return poly


TABLE = BernoulliTable()


def bernoulli_numbers(N: int) -> list[Fraction]:
    """B_0, ..., B_N with the convention B_1 = -1/2."""
    return TABLE.numbers(N)


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    return TABLE.polynomial(n)


def sawtooth(x) -> Fraction:
    """((x)): fractional part minus 1/2, and 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - rational_floor(x) - Fraction(1, 2)


def periodic_bernoulli_eval(n: int, x) -> Fraction:
    if n < 1:
        raise UsageError(f"periodic Bernoulli index must be >= 1, got {n}")
    if n == 1:
        return sawtooth(x)
    x = Fraction(x)
    return poly_eval(TABLE.polynomial(n), x - rational_floor(x))


def power_sum(n: int, a: int) -> Fraction:
    """1^n + 2^n + ... + (a-1)^n via (B_{n+1}(a) - B_{n+1}) / (n+1)."""
    if n < 1 or a < 1:
        raise UsageError(f"power_sum needs n >= 1 and a >= 1, got n={n}, a={a}")
    poly = TABLE.polynomial(n + 1)
    return (poly_eval(poly, a) - TABLE.numbers(n + 1)[n + 1]) / (n + 1)


def general_constant_B(n: int) -> int:
    """Denominator of the polynomial B_{n+1}(x), for even n >= 2."""
    if n < 2 or n % 2:
        raise UsageError(f"n must be even and >= 2, got {n}")
    return poly_denominator(TABLE.polynomial(n + 1))


def _shifted_denominator(m: int) -> int:
    # denominator of B_m(x) - B_m
    poly = TABLE.polynomial(m)
    return poly_denominator(RationalPolynomial((0,) + poly.coeffs[1:]))


def higher_constants(k: int, n: int) -> tuple[int, int]:
    """Return ``(beta, B)`` for products of 2n copies of the periodic
    Bernoulli function of index 2k+1.

    beta is the lcm of the denominators of B_{2k+1}(x) and of
    B_{P+a+1}(x) - B_{P+a+1} for 1 <= a <= 2k+1, with P = (2k+1)(2n-1).
    B is the lcm of beta^(2n) times each of
    (P+2)(P+3)...((2k+1)2n+1), 2n+1, 2n+2, ..., P+1.
    """
    if k < 1 or n < 1:
        raise UsageError(f"k and n must be >= 1, got k={k}, n={n}")
    P = (2 * k + 1) * (2 * n - 1)
    top = (2 * k + 1) * 2 * n + 1
    beta = poly_denominator(TABLE.polynomial(2 * k + 1))
    for alpha in range(1, 2 * k + 2):
        beta = math.lcm(beta, _shifted_denominator(P + alpha + 1))
    power = beta ** (2 * n)
    # [(2k+1)2n+1]! / [P+1]! as a product of consecutive integers
    ratio = math.prod(range(P + 2, top + 1))
    B = ratio * power
    for j in range(2 * n + 1, P + 2):
        B = math.lcm(B, j * power)
    return beta, B


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) = sum_{r=1}^{k-1} ((h r / k)) ((r / k)) for gcd(h, k) = 1."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if math.gcd(h, k) != 1:
        raise DomainError(f"s(h, k) needs coprime arguments, got h={h}, k={k}")
    return sum(
        (sawtooth(Fraction(h * r, k)) * sawtooth(Fraction(r, k)) for r in range(1, k)),
        Fraction(0),
    )
