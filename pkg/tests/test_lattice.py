import math
import random
from fractions import Fraction as F
from itertools import combinations_with_replacement, product

import pytest

from franel.arith import DomainError, UsageError
from franel.integrals import IntegralSpec
from franel.lattice import (
    convergence_report,
    integer_determinant,
    linear_form_truncated_sum,
    pi_coefficient,
    truncated_reciprocal_sum,
)


def naive_box(exponent, tup, bound):
    """Full-box enumeration, no coordinate elimination."""
    vals = [v for v in range(-bound, bound + 1) if v]
    total = F(0)
    for us in product(vals, repeat=len(tup)):
        if sum(a * u for a, u in zip(tup, us)) == 0:
            total += F(1, math.prod(us) ** exponent)
    return total


def naive_linear_forms(matrix, constraint, exponent, bound):
    vals = [v for v in range(-bound, bound + 1) if v]
    total = F(0)
    for us in product(vals, repeat=len(constraint)):
        if sum(F(c) * u for c, u in zip(constraint, us)) != 0:
            continue
        forms = math.prod(sum(r * u for r, u in zip(row, us)) for row in matrix)
        if forms:
            total += F(1, forms**exponent)
    return total


def test_truncated_examples():
    assert truncated_reciprocal_sum(3, (1, 1), 1) == -2
    assert truncated_reciprocal_sum(3, (1, 1), 2) == F(-65, 32)
    assert truncated_reciprocal_sum(1, (1, 1, 1, 1), 3) == naive_box(1, (1, 1, 1, 1), 3)


def test_truncated_validation():
    with pytest.raises(UsageError):
        truncated_reciprocal_sum(1, (1,), 3)
    with pytest.raises(UsageError):
        truncated_reciprocal_sum(1, (1, 0), 3)


def test_matches_naive_box_on_small_cases():
    for m in (2, 3):
        for tup in product(range(1, 4), repeat=m):
            for bound in (1, 3, 5):
                for e in (1, 3):
                    assert truncated_reciprocal_sum(e, tup, bound) == naive_box(e, tup, bound)


def test_permutation_invariance():
    for tup in [(1, 2, 3, 3), (2, 5, 1)]:
        ref = truncated_reciprocal_sum(1, tup, 7)
        for p in [tup[::-1], tup[1:] + tup[:1]]:
            assert truncated_reciprocal_sum(1, p, 7) == ref


def test_scaling_invariance():
    for tup in [(1, 2), (2, 3, 1), (1, 1, 2, 3)]:
        for r in (2, 3, 5):
            scaled = tuple(r * a for a in tup)
            for e in (1, 3):
                assert truncated_reciprocal_sum(e, scaled, 6) == truncated_reciprocal_sum(e, tup, 6)


def test_sign_law_for_all_ones():
    for j in (1, 2):
        s = truncated_reciprocal_sum(1, (1,) * (2 * j), 100)
        assert (s > 0) == (j % 2 == 0)


@pytest.mark.parametrize(
    "k, tup, coeff, power",
    [
        (1, (1, 1, 1, 1), F(1, 5), 4),
        (1, (1, 1), F(-1, 3), 2),
        (3, (1, 1), F(-2, 945), 6),
    ],
)
def test_pi_coefficient_examples(k, tup, coeff, power):
    assert pi_coefficient(IntegralSpec(k, tup)) == (coeff, power)


def test_pi_coefficient_zeta_cross_checks():
    # sum over u != 0 of 1/(u * -u)^e is -2 zeta(2e); zeta(2) = pi^2/6, zeta(6) = pi^6/945
    assert pi_coefficient(IntegralSpec(1, (1, 1)))[0] == -2 * F(1, 6)
    assert pi_coefficient(IntegralSpec(3, (1, 1)))[0] == -2 * F(1, 945)


def test_pi_coefficient_domain():
    with pytest.raises(DomainError):
        pi_coefficient(IntegralSpec(1, (1, 1, 1)))
    with pytest.raises(DomainError):
        pi_coefficient(IntegralSpec(2, (1, 1)))


def test_slow_tail_sawtooth_pair():
    coeff, p = pi_coefficient(IntegralSpec(1, (1, 1)))
    limit = float(coeff) * math.pi**p
    s = truncated_reciprocal_sum(1, (1, 1), 10_000)
    assert abs(float(s) - limit) < 1e-3 * abs(limit)


def test_convergence_report_examples():
    rep = convergence_report(IntegralSpec(1, (1, 1, 1, 1)), (50, 100, 200))
    d = [r.float_discrepancy for r in rep]
    assert d[0] > d[1] > d[2]
    assert all(r.pi_power == 4 and r.predicted_coefficient == F(1, 5) for r in rep)

    rep = convergence_report(IntegralSpec(3, (1, 1)), (10, 20))
    assert rep[-1].float_discrepancy < 1e-6
    # tail 2 * sum_{u > 20} u^-6 < 2 / (5 * 20^5)
    assert rep[-1].float_discrepancy < 2 / (5 * 20**5)

    (r,) = convergence_report(IntegralSpec(1, (2, 3)), (100,))
    target = float(r.predicted_coefficient) * math.pi**2
    assert abs(float(r.truncated) - target) < 0.05 * abs(target)

    with pytest.raises(UsageError):
        convergence_report(IntegralSpec(1, (1, 1)), (10, 10))


def test_determinant():
    assert integer_determinant([[2, 1], [1, 1]]) == 1
    assert integer_determinant([[0, 1], [1, 0]]) == -1
    assert integer_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert integer_determinant([[1, 2], [2, 4]]) == 0


def test_linear_forms_identity_reduces():
    eye = [[1, 0], [0, 1]]
    assert linear_form_truncated_sum(eye, (1, 1), 3, 2) == F(-65, 32)
    eye4 = [[int(i == j) for j in range(4)] for i in range(4)]
    for constraint, tup in [((1, 1, 1, 1), (1, 1, 1, 1)), ((F(1, 2), 1, F(3, 2), 1), (1, 2, 3, 2))]:
        for e in (1, 3):
            assert linear_form_truncated_sum(eye4, constraint, e, 3) == truncated_reciprocal_sum(
                e, tup, 3
            )


def test_linear_forms_against_naive():
    rng = random.Random(9)
    mats = [[[2, 1], [1, 1]], [[1, 1], [0, 1]], [[1, -1], [1, 0]]]
    for mat in mats:
        for constraint in [(1, 1), (1, 2), (3, -1)]:
            for e in (1, 3):
                bound = rng.randint(2, 6)
                assert linear_form_truncated_sum(mat, constraint, e, bound) == naive_linear_forms(
                    mat, constraint, e, bound
                )
    mat3 = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert linear_form_truncated_sum(mat3, (1, 1, 2), 1, 3) == naive_linear_forms(mat3, (1, 1, 2), 1, 3)


def test_linear_forms_domain():
    with pytest.raises(DomainError):
        linear_form_truncated_sum([[2, 0], [0, 1]], (1, 1), 1, 2)
    with pytest.raises(DomainError):
        linear_form_truncated_sum([[1, 0], [0, 1]], (1, 1), 2, 2)


def test_linear_forms_stabilise():
    # unimodular change of forms: partial sums settle at the float level
    mat = [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    vals = [float(linear_form_truncated_sum(mat, (1, 1, 1, 1), 3, U)) for U in (4, 8, 12)]
    assert abs(vals[2] - vals[1]) < abs(vals[1] - vals[0])
