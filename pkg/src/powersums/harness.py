"""Named identity suites shared by the test-suite and ``powersums verify``.

Each suite returns a :class:`SuiteReport`; a suite passes when it ran at least
one case and recorded no failures. Failures keep the exact expected and actual
values as strings, never abbreviated.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bernoulli import BernoulliCache, default_cache
from .egf import (
    egf_bernoulli_generator,
    egf_expm1_div_t,
    egf_geometric_sum,
    egf_one,
    egf_ratio_lhs_eq3,
    egf_star_lhs_eq7,
    egf_star_rhs_eq8,
    egf_star_series_eq8,
)
from .exact_poly import Polynomial, is_canonical
from .powersum import (
    PowerSumPoly,
    brute_force_sum,
    check_eq1_chain,
    check_eq6,
    faulhaber,
    power_sum_recurrence,
    star,
    star_integral,
)

__all__ = [
    "Failure",
    "SuiteReport",
    "DEFAULT_SEED",
    "suite_cross_method",
    "suite_oracle",
    "suite_series",
    "suite_structure",
    "suite_star_identity",
    "suite_recurrence_chain",
    "suite_bernoulli",
    "suite_algebra",
    "run_all",
    "faulty_recurrence",
]

DEFAULT_SEED = 20240601

Recurrence = Callable[[int], PowerSumPoly]
_X = Polynomial.x()


@dataclass(frozen=True)
class Failure:
    params: tuple
    expected: str
    actual: str

    def render(self) -> str:
        p = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"[{p}] expected {self.expected}, got {self.actual}"


@dataclass
class SuiteReport:
    suite_name: str
    checks: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.cases_run >= 1 and not self.failures

    def case(self, ok: bool, params: dict, expected, actual) -> None:
        self.cases_run += 1
        if not ok:
            self.failures.append(Failure(tuple(params.items()), str(expected), str(actual)))

    def finish(self) -> SuiteReport:
        self.failures.sort(key=lambda f: repr(f.params))
        return self

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (
            f"{status} {self.suite_name}: {self.cases_run} cases, "
            f"{len(self.failures)} failures -- {self.checks}"
        )
        if self.seed is not None:
            head += f" (seed {self.seed})"
        return "\n".join([head] + ["    " + f.render() for f in self.failures])


def faulty_recurrence(target: int) -> Recurrence:
    """Recurrence generator with the m^n coefficient of S_target negated.

    Used to check that the suites actually catch a wrong polynomial.
    """

    def gen(n: int) -> PowerSumPoly:
        s = power_sum_recurrence(n)
        if n != target:
            return s
        coeffs = list(s.poly.coeffs)
        coeffs[n] = -coeffs[n]
        return PowerSumPoly(n, Polynomial(coeffs), s.method)

    return gen


def suite_cross_method(max_n: int, recurrence: Recurrence = power_sum_recurrence) -> SuiteReport:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rep = SuiteReport("cross_method", "S_n = m + n*star(S_{n-1}) equals (B_{n+1}(m+1) - B_{n+1}(0))/(n+1)")
    for n in range(1, max_n + 1):
        rec, fh = recurrence(n).poly, faulhaber(n).poly
        rep.case(rec == fh, {"n": n}, fh, rec)
    return rep.finish()


def suite_oracle(max_n: int, max_m: int, recurrence: Recurrence = power_sum_recurrence) -> SuiteReport:
    if max_n < 0 or max_m < 0:
        raise ValueError("max_n and max_m must be >= 0")
    rep = SuiteReport("oracle", "S_n(m) polynomial value equals 1^n + ... + m^n by direct summation")
    for n in range(max_n + 1):
        p = recurrence(n).poly
        total = 0
        for m in range(max_m + 1):
            if m:
                total += m**n
            got = p(m)
            rep.case(got == total and got == brute_force_sum(n, m), {"n": n, "m": m}, total, got)
    return rep.finish()


def suite_series(order: int, max_m: int, cache: BernoulliCache | None = None) -> SuiteReport:
    if order < 1:
        raise ValueError("order must be >= 1")
    cache = cache or default_cache
    rep = SuiteReport(
        "series",
        "t e^{xt}/(e^t-1) coefficients equal binomial B_n(x); "
        "(e^{(m+1)t}-1)/(e^t-1) equals 1 + e^t + ... + e^{mt}; "
        "series of star(B_n(x+1)) equals (e^{(x+1)t}-e^t)/(e^t-1) - x e^t",
    )
    d = egf_expm1_div_t(order)
    unit = d * d.inverse()
    rep.case(unit == egf_one(order), {"check": "inverse", "order": order}, egf_one(order), unit)

    gen = egf_bernoulli_generator(order)
    for n in range(order + 1):
        want = cache.polynomial(n)
        rep.case(gen[n] == want, {"check": "generator", "n": n}, want, gen[n])

    for m in range(max_m + 1):
        lhs, rhs = egf_ratio_lhs_eq3(m, order), egf_geometric_sum(m, order)
        rep.case(lhs == rhs, {"check": "geometric", "m": m}, rhs, lhs)

    left = egf_star_lhs_eq7(order)
    closed = egf_star_rhs_eq8(order, cache)
    series = egf_star_series_eq8(order)
    for n in range(order + 1):
        rep.case(left[n] == closed[n], {"check": "star_closed", "n": n}, closed[n], left[n])
        rep.case(left[n] == series[n], {"check": "star_series", "n": n}, series[n], left[n])
    return rep.finish()


def suite_structure(max_n: int, recurrence: Recurrence = power_sum_recurrence) -> SuiteReport:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rep = SuiteReport(
        "structure",
        "degree n+1, leading 1/(n+1), m^n coefficient 1/2, S_n(0)=0, S_n(1)=1, "
        "S_n(m) - S_n(m-1) = m^n",
    )
    for n in range(1, max_n + 1):
        for s in (recurrence(n), faulhaber(n)):
            params = {"n": n, "method": s.method}
            problems = s.structural_problems()
            rep.case(not problems, {**params, "check": "shape"}, "no problems", "; ".join(problems))
            half = s.poly.coeff(n)
            rep.case(half == Fraction(1, 2), {**params, "check": "half"}, "1/2", half)
            diff = s.poly - s.poly.shift(-1)
            mono = Polynomial.monomial(n)
            rep.case(diff == mono, {**params, "check": "telescoping"}, mono, diff)
            bad = [c for c in s.poly.coeffs if not is_canonical(c)]
            rep.case(not bad, {**params, "check": "canonical"}, "reduced fractions", bad)
    return rep.finish()


def suite_star_identity(max_n: int, cache: BernoulliCache | None = None) -> SuiteReport:
    rep = SuiteReport(
        "star_identity",
        "star(B_n(x+1)) = (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n=0]",
    )
    for n in range(max_n + 1):
        r = check_eq6(n, cache)
        rep.case(r.holds, {"n": n}, r.rhs, r.lhs)
    return rep.finish()


def suite_recurrence_chain(max_n: int, cache: BernoulliCache | None = None) -> SuiteReport:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rep = SuiteReport(
        "recurrence_chain",
        "n*star(S_{n-1}) = S_n - m with S from the Bernoulli closed form",
    )
    for n in range(1, max_n + 1):
        r = check_eq1_chain(n, cache)
        rep.case(r.holds, {"n": n}, r.rhs, r.lhs)
    return rep.finish()


def suite_bernoulli(max_n: int, max_odd: int | None = None, cache: BernoulliCache | None = None) -> SuiteReport:
    """Bernoulli number/polynomial properties up to ``max_n``.

    Odd-index vanishing is checked for 3 <= j <= ``max_odd`` (default
    ``max_n``); B_1 itself is checked to be -1/2.
    """
    cache = cache or default_cache
    max_odd = max_n if max_odd is None else max_odd
    rep = SuiteReport(
        "bernoulli",
        "B_1 = -1/2, B_odd = 0, B_n(1) = B_n(0), B_n(x+1) - B_n(x) = n x^{n-1}, "
        "B_n' = n B_{n-1}, B_n(0) = B_n",
    )
    b1 = cache.number(1)
    rep.case(b1 == Fraction(-1, 2), {"check": "b1"}, "-1/2", b1)
    for j in range(3, max_odd + 1, 2):
        b = cache.number(j)
        rep.case(b == 0, {"check": "odd", "n": j}, 0, b)
    for n in range(max_n + 1):
        bn = cache.polynomial(n)
        if n >= 2:
            rep.case(bn(1) == bn(0), {"check": "endpoints", "n": n}, bn(0), bn(1))
        if n >= 1:
            diff = bn.shift(1) - bn
            want = n * Polynomial.monomial(n - 1)
            rep.case(diff == want, {"check": "difference", "n": n}, want, diff)
            deriv = bn.derivative()
            want = n * cache.polynomial(n - 1)
            rep.case(deriv == want, {"check": "derivative", "n": n}, want, deriv)
        rep.case(bn(0) == cache.number(n), {"check": "constant", "n": n}, cache.number(n), bn(0))
    return rep.finish()


def _random_poly(rng: random.Random, max_degree: int) -> Polynomial:
    return Polynomial(rng.randint(-9, 9) for _ in range(rng.randint(0, max_degree) + 1))


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 12))


def suite_algebra(seed: int = DEFAULT_SEED, trials: int = 40) -> SuiteReport:
    """Randomized checks of the polynomial substrate and the star operator."""
    rng = random.Random(seed)
    rep = SuiteReport(
        "algebra",
        "evaluation is multiplicative, shift round-trips, (antiderivative)' = id, "
        "star is linear and vanishes at 0 and 1, termwise star = integral star",
        seed=seed,
    )
    for t in range(trials):
        p, q = _random_poly(rng, 8), _random_poly(rng, 8)
        a = _random_rational(rng)
        pq = p * q
        for i in range(10):
            pt = _random_rational(rng)
            rep.case(pq(pt) == p(pt) * q(pt), {"check": "mul_eval", "trial": t, "point": i}, p(pt) * q(pt), pq(pt))
        back = p.shift(a).shift(-a)
        rep.case(back == p, {"check": "shift", "trial": t}, p, back)
        P = p.antiderivative()
        rep.case(P.derivative() == p and P(0) == 0, {"check": "antiderivative", "trial": t}, p, P.derivative())
        b, c = _random_rational(rng), _random_rational(rng)
        lin = star(p * b + q * c)
        want = star(p) * b + star(q) * c
        rep.case(lin == want, {"check": "star_linear", "trial": t}, want, lin)
        sp = star(p)
        rep.case(sp(0) == 0 and sp(1) == 0, {"check": "star_roots", "trial": t}, "0, 0", f"{sp(0)}, {sp(1)}")
        r = _random_poly(rng, 12)
        rep.case(star(r) == star_integral(r), {"check": "star_routes", "trial": t}, star_integral(r), star(r))
    return rep.finish()


def run_all(
    max_n: int,
    max_m: int,
    order: int = 20,
    seed: int = DEFAULT_SEED,
    recurrence: Recurrence = power_sum_recurrence,
) -> list[SuiteReport]:
    """Every suite, in a fixed order."""
    return [
        suite_cross_method(max_n, recurrence),
        suite_oracle(max_n, max_m, recurrence),
        suite_structure(max_n, recurrence),
        suite_star_identity(max_n),
        suite_recurrence_chain(max_n),
        suite_bernoulli(max_n),
        suite_series(order, max_m),
        suite_algebra(seed),
    ]
