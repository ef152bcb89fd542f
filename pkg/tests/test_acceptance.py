"""Exit criteria. Each test records a PASS/FAIL line printed at the end of
the run; tolerances and time limits are the stated ones."""

import math
import random
import time
from fractions import Fraction as F
from itertools import combinations_with_replacement, product

from franel.bernoulli import dedekind_sum, general_constant_B
from franel.certificates import TheoremKind, certificate, multiplier
from franel.integrals import IntegralSpec, franel_integral
from franel.lattice import (
    convergence_report,
    linear_form_truncated_sum,
    pi_coefficient,
    truncated_reciprocal_sum,
)


def I(k, tup):
    return franel_integral(IntegralSpec(k, tuple(tup)))


def naive_box(exponent, tup, bound):
    vals = [v for v in range(-bound, bound + 1) if v]
    total = F(0)
    for us in product(vals, repeat=len(tup)):
        if sum(a * u for a, u in zip(tup, us)) == 0:
            total += F(1, math.prod(us) ** exponent)
    return total


def test_01_franel_pair_formula(criterion):
    with criterion(1, "I_1(a,b) = gcd^2/(12ab), 1 <= a,b <= 40"):
        start = time.perf_counter()
        bad = [
            (a, b)
            for a in range(1, 41)
            for b in range(1, 41)
            if I(1, (a, b)) != F(math.gcd(a, b) ** 2, 12 * a * b)
        ]
        assert not bad, f"mismatches at {bad[:5]}"
        assert time.perf_counter() - start < 5


def test_02_mcintosh_closed_form(criterion):
    with criterion(2, "I_1(a,1,1,1) = (5a-2)/(240a^3), 1 <= a <= 100"):
        start = time.perf_counter()
        bad = [a for a in range(1, 101) if I(1, (a, 1, 1, 1)) != F(5 * a - 2, 240 * a**3)]
        assert time.perf_counter() - start < 10
        assert not bad, (
            f"{len(bad)} mismatches, first a={bad[0]}: exact {I(1, (bad[0], 1, 1, 1))} "
            f"vs expected {F(5 * bad[0] - 2, 240 * bad[0] ** 3)}"
        )


def test_02b_mcintosh_closed_form_corrected():
    # the values that criterion 2 should have: numerator 5a^2 - 2
    for a in range(1, 101):
        assert I(1, (a, 1, 1, 1)) == F(5 * a * a - 2, 240 * a**3)


CLOSED_FORMS = {
    6: lambda a: F(16 - 28 * a**2 + 21 * a**4, 4032 * a**5),
    8: lambda a: F(-48 + 80 * a**2 - 42 * a**4 + 15 * a**6, 11520 * a**7),
    10: lambda a: F(1280 - 2112 * a**2 + 1056 * a**4 - 264 * a**6 + 55 * a**8, 168960 * a**9),
    12: lambda a: F(
        -353792 + 582400 * a**2 - 288288 * a**4 + 68640 * a**6 - 10010 * a**8 + 1365 * a**10,
        16773120 * a**11,
    ),
}


def test_03_general_closed_forms(criterion):
    with criterion(3, "I_1(a,1,...,1) closed forms for n = 6, 8, 10, 12, 1 <= a <= 20"):
        start = time.perf_counter()
        for n, form in CLOSED_FORMS.items():
            for a in range(1, 21):
                assert I(1, (a,) + (1,) * (n - 1)) == form(a), (n, a)
        assert time.perf_counter() - start < 120


def _sweep(kind, tuples):
    return [t for t in tuples if not certificate(kind, t).is_integer]


def test_04_mcintosh_sweep(criterion):
    with criterion(4, "four-factor certificate sweep, 4-tuples with entries <= 10 (715 multisets)"):
        start = time.perf_counter()
        tuples = list(combinations_with_replacement(range(1, 11), 4))
        assert len(tuples) == 715
        bad = _sweep(TheoremKind.mcintosh4(), tuples)
        assert not bad, f"violations {bad[:5]}"
        assert time.perf_counter() - start < 120


def test_05_general_sweep_k3(criterion):
    with criterion(5, "even-length certificate sweep k=3, entries <= 3 plus 500 random entries <= 6; k=2 constant"):
        start = time.perf_counter()
        kind = TheoremKind.general_even(3)
        exhaustive = list(product(range(1, 4), repeat=6))
        rng = random.Random(20240501)
        sampled = [tuple(rng.randint(1, 6) for _ in range(6)) for _ in range(500)]
        bad = _sweep(kind, exhaustive + sampled)
        assert not bad, f"violations {bad[:5]}"

        k2 = TheoremKind.general_even(2)
        assert multiplier(k2, (1, 1, 1, 1)) == 240
        rng = random.Random(99)
        for _ in range(100):
            t = tuple(rng.randint(1, 30) for _ in range(4))
            assert multiplier(k2, t) == multiplier(TheoremKind.mcintosh4(), t), t
        assert time.perf_counter() - start < 300


def test_06_higher_sweep(criterion):
    with criterion(6, "odd-index certificate sweeps (k,n) = (1,1) <= 20, (1,2) <= 4, (2,1) <= 10; f(1,1) = 18"):
        start = time.perf_counter()
        bad = _sweep(TheoremKind.higher(1, 1), product(range(1, 21), repeat=2))
        bad += _sweep(TheoremKind.higher(1, 2), product(range(1, 5), repeat=4))
        bad += _sweep(TheoremKind.higher(2, 1), product(range(1, 11), repeat=2))
        assert not bad, f"violations {bad[:5]}"
        assert certificate(TheoremKind.higher(1, 1), (1, 1)).product == 18
        assert time.perf_counter() - start < 300


def test_07_sharpness(criterion):
    with criterion(7, "denominator of I(a,1,1,1) is 240a^3 for a in {3, 9, 15, 21}"):
        for a in (3, 9, 15, 21):
            assert I(1, (a, 1, 1, 1)).denominator == 240 * a**3, a


def test_08_bernoulli_constants(criterion):
    with criterion(8, "general_constant_B(6, 8, 10, 12) = 6, 10, 6, 210"):
        assert [general_constant_B(n) for n in (6, 8, 10, 12)] == [6, 10, 6, 210]


def test_09_parity_and_scaling(criterion):
    with criterion(9, "odd-length parity zero; I_3 and I_1 scaling invariance"):
        for m in (1, 3, 5):
            for t in product(range(1, 7), repeat=m):
                assert I(1, t) == 0, t
        for t in [(1, 1), (1, 2), (2, 3)]:
            for r in range(1, 6):
                assert I(3, tuple(r * a for a in t)) == I(3, t), (t, r)
        for t in product(range(1, 4), repeat=4):
            for r in range(1, 4):
                assert I(1, tuple(r * a for a in t)) == I(1, t), (t, r)


def test_10_dedekind_reciprocity(criterion):
    with criterion(10, "Dedekind reciprocity for coprime h, k <= 40"):
        for h in range(1, 41):
            for k in range(1, 41):
                if math.gcd(h, k) == 1:
                    rhs = F(-1, 4) + F(1, 12) * (F(h, k) + F(1, h * k) + F(k, h))
                    assert dedekind_sum(h, k) + dedekind_sum(k, h) == rhs, (h, k)


def test_11_lattice_fast_decay(criterion):
    with criterion(11, "|L_3(1,1; U=50) - (-2/945) pi^6| < 1e-8"):
        coeff, power = pi_coefficient(IntegralSpec(3, (1, 1)))
        assert (coeff, power) == (F(-2, 945), 6)
        s = truncated_reciprocal_sum(3, (1, 1), 50)
        assert abs(float(s) - float(coeff) * math.pi**6) < 1e-8


def test_12_lattice_sawtooth_quadruple(criterion):
    with criterion(12, "L(1,1,1,1) at U = 100, 200, 400: decreasing discrepancy, rel. error < 5%"):
        start = time.perf_counter()
        # calibration: the fast path equals the naive full-box sum at U = 20
        assert truncated_reciprocal_sum(1, (1, 1, 1, 1), 20) == naive_box(1, (1, 1, 1, 1), 20)
        spec = IntegralSpec(1, (1, 1, 1, 1))
        assert pi_coefficient(spec) == (F(1, 5), 4)
        rep = convergence_report(spec, (100, 200, 400))
        d = [r.float_discrepancy for r in rep]
        assert d[0] > d[1] > d[2], d
        assert d[2] / (math.pi**4 / 5) < 0.05
        assert time.perf_counter() - start < 60


def test_13_oracle_equivalence(criterion):
    with criterion(13, "truncated sums equal naive box enumeration; identity linear forms reduce"):
        for m in (2, 3, 4):
            tuples = (
                product(range(1, 4), repeat=m)
                if m < 4
                else combinations_with_replacement(range(1, 4), m)
            )
            for t in tuples:
                for bound in range(1, 7 if m < 4 else 5):
                    for e in (1, 3):
                        assert truncated_reciprocal_sum(e, t, bound) == naive_box(e, t, bound), (
                            t,
                            bound,
                            e,
                        )
        for t in product(range(1, 4), repeat=4):
            assert truncated_reciprocal_sum(1, t, 6) == naive_box(1, t, 6), t
        for size in (2, 4):
            eye = [[int(i == j) for j in range(size)] for i in range(size)]
            for t in combinations_with_replacement(range(1, 4), size):
                for e in (1, 3):
                    assert linear_form_truncated_sum(eye, t, e, 4) == truncated_reciprocal_sum(e, t, 4)
