"""Power sums S_n(m) = 1^n + ... + m^n as exact polynomials in m.

Two independent constructions are provided:

* :func:`power_sum_recurrence` -- S_0 = m and S_n = m + n * star(S_{n-1});
* :func:`faulhaber` -- S_n = (B_{n+1}(m+1) - B_{n+1}(0)) / (n+1), n >= 1.

``star`` is the linear map x^j -> (x^(j+1) - x)/(j+1).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import BernoulliCache, default_cache
from .exact_poly import Polynomial

__all__ = [
    "PowerSumPoly",
    "IdentityReport",
    "star",
    "star_integral",
    "power_sum_recurrence",
    "faulhaber",
    "brute_force_sum",
    "check_eq6",
    "check_eq1_chain",
    "RECURRENCE",
    "BERNOULLI",
]

RECURRENCE = "recurrence"
BERNOULLI = "bernoulli"

_X = Polynomial.x()


@dataclass(frozen=True)
class PowerSumPoly:
    n: int
    poly: Polynomial
    method: str

    def structural_problems(self) -> list[str]:
        """Violations of degree n+1, leading 1/(n+1), S(0)=0 and S(1)=1."""
        p, n = self.poly, self.n
        problems = []
        if p.degree != n + 1:
            problems.append(f"degree {p.degree}, expected {n + 1}")
        if p.leading != Fraction(1, n + 1):
            problems.append(f"leading coefficient {p.leading}, expected 1/{n + 1}")
        if p(0) != 0:
            problems.append(f"S_{n}(0) = {p(0)}, expected 0")
        if p(1) != 1:
            problems.append(f"S_{n}(1) = {p(1)}, expected 1")
        return problems


@dataclass(frozen=True)
class IdentityReport:
    name: str
    n: int
    lhs: Polynomial
    rhs: Polynomial

    @property
    def difference(self) -> Polynomial:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.difference.is_zero()

    def __bool__(self) -> bool:
        return self.holds


def star(p: Polynomial) -> Polynomial:
    """Termwise image: each x^j becomes (x^(j+1) - x)/(j+1)."""
    out = [Fraction(0)] * (len(p.coeffs) + 1)
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        w = c / (j + 1)
        out[j + 1] += w
        out[1] -= w
    return Polynomial(out)


def star_integral(p: Polynomial) -> Polynomial:
    """star via integrals: int_0^x p(y) dy - x * int_0^1 p(y) dy."""
    P = p.antiderivative()
    return P - _X * P(1)


class _RecurrenceMemo:
    def __init__(self) -> None:
        self._polys: list[Polynomial] = [_X]
        self._lock = threading.Lock()

    def get(self, n: int) -> Polynomial:
        if n < len(self._polys):
            return self._polys[n]
        with self._lock:
            polys = list(self._polys)
            for k in range(len(polys), n + 1):
                polys.append(_X + k * star(polys[k - 1]))
            self._polys = polys
        return self._polys[n]


_memo = _RecurrenceMemo()


def power_sum_recurrence(n: int) -> PowerSumPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return PowerSumPoly(n, _memo.get(n), RECURRENCE)


def faulhaber(n: int, cache: BernoulliCache | None = None) -> PowerSumPoly:
    if n < 1:
        raise ValueError(
            "the Bernoulli closed form holds only for n >= 1 (it gives m + 1 at "
            "n = 0); use power_sum_recurrence(0) for S_0(m) = m"
        )
    cache = cache or default_cache
    b = cache.polynomial(n + 1)
    poly = (b.shift(1) - cache.number(n + 1)) / (n + 1)
    return PowerSumPoly(n, poly, BERNOULLI)


def brute_force_sum(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    return sum(k**n for k in range(1, m + 1))


def check_eq6(n: int, cache: BernoulliCache | None = None) -> IdentityReport:
    """star(B_n(x+1)) against (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n == 0]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cache = cache or default_cache
    lhs = star(cache.polynomial(n).shift(1))
    rhs = (cache.polynomial(n + 1).shift(1) - cache.number(n + 1)) / (n + 1) - _X
    if n == 0:
        rhs = rhs - 1
    return IdentityReport("star_bernoulli_shift", n, lhs, rhs)


def check_eq1_chain(n: int, cache: BernoulliCache | None = None) -> IdentityReport:
    """n * star(S_{n-1}) = S_n - m, with both sums from the Bernoulli closed form.

    n * S_{n-1} is taken as B_n(m+1) - B_n(0). At n = 1 that is m + 1 rather
    than m, but star kills constants so the left side is unaffected.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cache = cache or default_cache
    lhs = star(cache.polynomial(n).shift(1) - cache.number(n))
    rhs = faulhaber(n, cache).poly - _X
    return IdentityReport("recurrence_via_bernoulli", n, lhs, rhs)
