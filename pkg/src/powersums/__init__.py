"""Exact power-sum polynomials, Bernoulli polynomials and truncated EGFs."""
from .bernoulli import BernoulliCache, bernoulli_number, bernoulli_polynomial, binomial
from .exact_poly import Polynomial, Rational
from .powersum import (
    IdentityReport,
    PowerSumPoly,
    brute_force_sum,
    check_eq1_chain,
    check_eq6,
    faulhaber,
    power_sum_recurrence,
    star,
    star_integral,
)

__version__ = "0.1.0"
