"""Truncated reciprocal sums over the lattice hyperplane sum a_i u_i = 0,
and the rational coefficient of the power of pi they converge to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

from . import _kernels
from .arith import DomainError, UsageError
from .integrals import IntegralSpec, franel_integral

__all__ = [
    "LatticeSumResult",
    "truncated_reciprocal_sum",
    "pi_coefficient",
    "convergence_report",
    "linear_form_truncated_sum",
    "integer_determinant",
]


@dataclass(frozen=True)
class LatticeSumResult:
    bound: int
    truncated: Fraction
    predicted_coefficient: Fraction
    pi_power: int
    float_discrepancy: float


def truncated_reciprocal_sum(exponent: int, tup, bound: int) -> Fraction:
    """Sum of 1/(u_1...u_m)^exponent over 0 < |u_i| <= bound with
    sum a_i u_i = 0."""
    tup = [int(a) for a in tup]
    if len(tup) < 2:
        raise UsageError("the tuple needs at least two entries")
    if any(a < 1 for a in tup):
        raise UsageError(f"entries must be positive, got {tup}")
    if exponent < 1 or bound < 1:
        raise UsageError(f"exponent and bound must be positive, got {exponent}, {bound}")
    # common denominator W = lcm(1..U)^e keeps the whole table integral
    W = reduce(math.lcm, range(1, bound + 1), 1) ** exponent
    wpos = [W // u**exponent for u in range(1, bound + 1)]
    sign = -1 if exponent % 2 else 1
    wneg = [sign * w for w in wpos]
    num = _kernels.lattice_numerator(tup, wpos, wneg, bound)
    return Fraction(num, W ** len(tup))


def pi_coefficient(spec: IntegralSpec) -> tuple[Fraction, int]:
    """``(r, p)`` with the untruncated sum equal to r * pi^p.

    With index 2k+1 and 2n factors the sum is
    (-1)^n [(2 pi)^(2k+1) / (2k+1)!]^(2n) times the integral.
    """
    q = spec.index
    m = len(spec.multipliers)
    if q % 2 == 0 or m % 2:
        raise DomainError(
            f"needs an odd index and an even factor count, got index {q} with {m} factors"
        )
    half = m // 2
    scale = Fraction(2**q, math.factorial(q)) ** m
    return (-1) ** half * scale * franel_integral(spec), m * q


def convergence_report(spec: IntegralSpec, bounds) -> list[LatticeSumResult]:
    bounds = list(bounds)
    if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise UsageError(f"bounds must be strictly increasing, got {bounds}")
    coeff, power = pi_coefficient(spec)
    limit = float(coeff) * math.pi**power
    out = []
    for U in bounds:
        s = truncated_reciprocal_sum(spec.index, spec.multipliers, U)
        out.append(LatticeSumResult(U, s, coeff, power, abs(float(s) - limit)))
    return out


def integer_determinant(matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise UsageError("matrix must be square")
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1] if n else 1


def linear_form_truncated_sum(matrix, constraint, exponent: int, bound: int) -> Fraction:
    """Sum of 1/(L_1...L_N)^exponent, L_i the row forms of ``matrix``,
    over integer u with 0 < |u_j| <= bound, sum c_j u_j = 0 and every
    L_i(u) nonzero."""
    rows = [list(map(int, row)) for row in matrix]
    size = len(rows)
    if abs(integer_determinant(rows)) != 1:
        raise DomainError("matrix must be unimodular (determinant +-1)")
    if exponent < 1 or exponent % 2 == 0:
        raise DomainError(f"exponent must be odd and positive, got {exponent}")
    cs = [Fraction(c) for c in constraint]
    if len(cs) != size:
        raise UsageError(f"constraint needs {size} entries, got {len(cs)}")
    den = reduce(math.lcm, (c.denominator for c in cs), 1)
    ints = [int(c * den) for c in cs]
    # solve for the last coordinate with a nonzero coefficient
    pivot = max((j for j in range(size) if ints[j]), default=None)
    free = [j for j in range(size) if j != pivot]
    values = [v for v in range(-bound, bound + 1) if v]
    total = Fraction(0)
    u = [0] * size
    for combo in product(values, repeat=len(free)):
        for j, v in zip(free, combo):
            u[j] = v
        if pivot is not None:
            rest = -sum(ints[j] * u[j] for j in free)
            if rest % ints[pivot]:
                continue
            v = rest // ints[pivot]
            if v == 0 or abs(v) > bound:
                continue
            u[pivot] = v
        forms = math.prod(sum(r[j] * u[j] for j in range(size)) for r in rows)
        if forms:
            total += Fraction(1, forms**exponent)
    return total
