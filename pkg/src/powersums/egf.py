"""Truncated exponential generating functions.

A series sum_n a_n t^n / n! is stored by its ``a_n`` (not a_n / n!), so
products are binomial convolutions. Coefficients are either Fractions
(:class:`TruncatedEGF`) or polynomials in x (:class:`PolyEGF`). Binary
operations on series of different orders truncate to the smaller order.

Division by e^t - 1 never needs a Laurent series: every numerator used here
carries a factor t, which is cancelled first so that only (e^t - 1)/t, with
constant term 1, gets inverted.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Union

from .bernoulli import BernoulliCache, default_cache
from .exact_poly import Polynomial
from .powersum import star_integral

__all__ = [
    "TruncatedEGF",
    "PolyEGF",
    "egf_one",
    "egf_exp",
    "egf_mul",
    "egf_inverse",
    "egf_expm1_div_t",
    "egf_bernoulli_generator",
    "egf_geometric_sum",
    "egf_ratio_lhs_eq3",
    "egf_star_lhs_eq7",
    "egf_star_rhs_eq8",
    "egf_star_series_eq8",
]

_X = Polynomial.x()


class _EGF:
    __slots__ = ("coeffs",)
    _zero: object
    _one: object

    def __init__(self, coeffs: Iterable) -> None:
        coeffs = tuple(self._coerce(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int):
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} series to {order}")
        return type(self)(self.coeffs[: order + 1])

    def _check_kind(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __add__(self, other):
        self._check_kind(other)
        return type(self)(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check_kind(other)
        return type(self)(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return type(self)(-a for a in self.coeffs)

    def scale(self, c):
        """Multiply every coefficient by the constant (or polynomial) ``c``."""
        return type(self)(a * c for a in self.coeffs)

    def __mul__(self, other):
        self._check_kind(other)
        a, b = self.coeffs, other.coeffs
        order = min(len(a), len(b)) - 1
        out = []
        for n in range(order + 1):
            acc = self._zero
            for k in range(n + 1):
                acc = acc + comb(n, k) * (a[k] * b[n - k])
            out.append(acc)
        return type(self)(out)

    def inverse(self):
        f = self.coeffs
        c0 = self._unit_value(f[0])
        g = [self._coerce(1) / c0]
        for n in range(1, len(f)):
            acc = self._zero
            for k in range(1, n + 1):
                acc = acc + comb(n, k) * (f[k] * g[n - k])
            g.append(-acc / c0)
        return type(self)(g)

    def map(self, fn: Callable):
        return type(self)(fn(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}([{', '.join(str(c) for c in self.coeffs)}])"


class TruncatedEGF(_EGF):
    """Order-N truncation of sum a_n t^n/n! with rational a_n."""

    __slots__ = ()
    _zero = Fraction(0)

    @staticmethod
    def _coerce(c) -> Fraction:
        if isinstance(c, Polynomial):
            raise TypeError("TruncatedEGF coefficients must be rational")
        return Fraction(c)

    @staticmethod
    def _unit_value(c0: Fraction) -> Fraction:
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        return c0

    def lift(self) -> PolyEGF:
        """The same series viewed with constant-polynomial coefficients."""
        return PolyEGF(Polynomial.constant(c) for c in self.coeffs)


class PolyEGF(_EGF):
    """Order-N truncation of sum p_n(x) t^n/n! with p_n in Q[x]."""

    __slots__ = ()
    _zero = Polynomial()

    @staticmethod
    def _coerce(c) -> Polynomial:
        return c if isinstance(c, Polynomial) else Polynomial.constant(c)

    @staticmethod
    def _unit_value(c0: Polynomial) -> Fraction:
        if c0.degree != 0:
            raise ZeroDivisionError(
                f"constant term {c0} is not a nonzero constant; series is not invertible"
            )
        return c0.coeffs[0]

    def max_degree_excess(self) -> int | float:
        """Largest deg(p_n) - n; <= 0 when every p_n has degree at most n."""
        return max(p.degree - n for n, p in enumerate(self.coeffs))


Series = Union[TruncatedEGF, PolyEGF]


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError("series order must be >= 0")


def egf_one(order: int) -> TruncatedEGF:
    _check_order(order)
    return TruncatedEGF([1] + [0] * order)


def egf_exp(a, order: int) -> Series:
    """e^{a t}: coefficient n is a^n (0^0 = 1)."""
    _check_order(order)
    if isinstance(a, Polynomial):
        return PolyEGF(a**n for n in range(order + 1))
    a = Fraction(a)
    return TruncatedEGF(a**n for n in range(order + 1))


def egf_mul(f: Series, g: Series) -> Series:
    return f * g


def egf_inverse(f: Series) -> Series:
    return f.inverse()


def egf_expm1_div_t(order: int) -> TruncatedEGF:
    """(e^t - 1)/t, whose n-th EGF coefficient is 1/(n+1)."""
    _check_order(order)
    return TruncatedEGF(Fraction(1, n + 1) for n in range(order + 1))


def _exp_minus_one_div_t(a, order: int) -> Series:
    # (e^{a t} - 1)/t has EGF coefficients a^(n+1)/(n+1)
    if isinstance(a, Polynomial):
        return PolyEGF(a ** (n + 1) / (n + 1) for n in range(order + 1))
    return TruncatedEGF(Fraction(a) ** (n + 1) / (n + 1) for n in range(order + 1))


def egf_bernoulli_generator(order: int) -> PolyEGF:
    """t e^{xt} / (e^t - 1) as e^{xt} * [(e^t - 1)/t]^{-1}."""
    _check_order(order)
    return egf_exp(_X, order) * egf_expm1_div_t(order).inverse().lift()


def egf_geometric_sum(m: int, order: int) -> TruncatedEGF:
    """1 + e^t + ... + e^{mt}, coefficient n being sum_{k=0}^m k^n."""
    _check_order(order)
    if m < 0:
        raise ValueError("m must be >= 0")
    return TruncatedEGF(sum(k**n for k in range(m + 1)) for n in range(order + 1))


def egf_ratio_lhs_eq3(m: int, order: int) -> TruncatedEGF:
    """(e^{(m+1)t} - 1)/(e^t - 1), cancelling t from numerator and denominator."""
    _check_order(order)
    if m < 0:
        raise ValueError("m must be >= 0")
    return _exp_minus_one_div_t(m + 1, order) * egf_expm1_div_t(order).inverse()


def egf_star_lhs_eq7(order: int) -> PolyEGF:
    """Series of star(B_n(x+1)), read off the Bernoulli generator.

    Substituting y+1 into the generator shifts each coefficient by one; the two
    integrals over y then act coefficientwise as ``star_integral``.
    """
    gen = egf_bernoulli_generator(order)
    return gen.map(lambda p: star_integral(p.shift(1)))


def egf_star_rhs_eq8(order: int, cache: BernoulliCache | None = None) -> PolyEGF:
    """Closed form (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n == 0]."""
    _check_order(order)
    cache = cache or default_cache
    out = []
    for n in range(order + 1):
        p = (cache.polynomial(n + 1).shift(1) - cache.number(n + 1)) / (n + 1) - _X
        if n == 0:
            p = p - 1
        out.append(p)
    return PolyEGF(out)


def egf_star_series_eq8(order: int) -> PolyEGF:
    """(e^{(x+1)t} - e^t)/(e^t - 1) - x e^t by series algebra alone.

    The first term is e^t * [(e^{xt} - 1)/t] * [(e^t - 1)/t]^{-1}.
    """
    _check_order(order)
    e_t = egf_exp(1, order).lift()
    ratio = _exp_minus_one_div_t(_X, order) * egf_expm1_div_t(order).inverse().lift()
    return e_t * ratio - e_t.scale(_X)
