"""Exact rational scalars and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator. Polynomials store their coefficients
in ascending order of degree; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Polynomial",
    "ZERO_DEGREE",
    "is_canonical",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_div",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "poly_shift",
    "poly_antiderivative",
    "poly_derivative",
    "from_ints",
]

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = float("-inf")


def is_canonical(r: Fraction) -> bool:
    """True if ``r`` is a Fraction in reduced form with positive denominator."""
    from math import gcd

    return (
        isinstance(r, Fraction)
        and r.denominator > 0
        and gcd(abs(r.numerator), r.denominator) == 1
    )


def rat_add(a: Scalar, b: Scalar) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Scalar, b: Scalar) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_neg(a: Scalar) -> Fraction:
    return -Fraction(a)


def rat_div(a: Scalar, b: Scalar) -> Fraction:
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError(f"cannot divide {Fraction(a)} by zero")
    return Fraction(a) / b


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of the k-th power. The indeterminate has
    no name here; renderers pick one (``m``, ``x``, ...) at output time.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Polynomial:
        if k < 0:
            raise ValueError("monomial power must be >= 0")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int | float:
        """Index of the highest nonzero coefficient, ``ZERO_DEGREE`` for 0."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Polynomial:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial(c / other for c in self.coeffs)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, at: Scalar) -> Fraction:
        # Horner
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def shift(self, a: Scalar) -> Polynomial:
        """Return q with q(x) = p(x + a)."""
        if a == 0:
            return self
        step = Polynomial((a, 1))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * step + c
        return acc

    def antiderivative(self) -> Polynomial:
        """Antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = "x" if k == 1 else f"x^{k}" if k else ""
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            terms.append(("-" if c < 0 else "+", text))
        sign, text = terms[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, at: Scalar) -> Fraction:
    return p(at)


def poly_shift(p: Polynomial, a: Scalar) -> Polynomial:
    return p.shift(a)


def poly_antiderivative(p: Polynomial) -> Polynomial:
    return p.antiderivative()


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def from_ints(coeffs: Sequence[int], denominator: int = 1) -> Polynomial:
    """Build ``(c_0 + c_1 x + ...)/denominator`` from integer coefficients."""
    return Polynomial(Fraction(c, denominator) for c in coeffs)
