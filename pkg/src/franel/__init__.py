"""Exact Franel-type integrals of periodic Bernoulli functions, their
integrality certificates, and the matching lattice reciprocal sums."""

from ._kernels import BACKEND
from .arith import (
    DomainError,
    Rational,
    RationalPolynomial,
    UsageError,
    format_rational,
    gcd_list,
    lcm_list,
    parse_rational,
    poly_antiderivative,
    poly_denominator,
    poly_eval,
    poly_mul,
    poly_substitute_linear,
    rational_floor,
)
from .bernoulli import (
    bernoulli_numbers,
    bernoulli_polynomial,
    dedekind_sum,
    general_constant_B,
    higher_constants,
    periodic_bernoulli_eval,
    power_sum,
    sawtooth,
)
from .certificates import (
    CertificateReport,
    TheoremKind,
    certificate,
    gcd_product,
    multiplier,
    sharpness_check,
)
from .integrals import (
    IntegralSpec,
    breakpoints,
    franel_integral,
    franel_integral_normalized,
    piece_polynomial,
)
from .lattice import (
    LatticeSumResult,
    convergence_report,
    linear_form_truncated_sum,
    pi_coefficient,
    truncated_reciprocal_sum,
)

__version__ = "0.1.0"
