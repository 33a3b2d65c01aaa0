"""Bernoulli numbers and polynomials, B_1 = -1/2 convention."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .exact_poly import Polynomial

__all__ = [
    "BernoulliCache",
    "binomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "default_cache",
]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return comb(n, k)


class BernoulliCache:
    """Grow-only table of B_0, B_1, ... filled by the standard recurrence

        B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k,   B_0 = 1.

    Extensions run under a lock and publish the new entries in one step, so
    concurrent readers only ever see a prefix of the same table.
    """

    def __init__(self) -> None:
        self._table: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._table)

    @property
    def table(self) -> tuple[Fraction, ...]:
        return tuple(self._table)

    def fill(self, n: int) -> None:
        if n < len(self._table):
            return
        with self._lock:
            table = list(self._table)
            for j in range(len(table), n + 1):
                s = sum(comb(j + 1, k) * table[k] for k in range(j))
                table.append(-s / (j + 1))
            self._table = table

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        self.fill(n)
        return self._table[n]

    def polynomial(self, n: int) -> Polynomial:
        """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        self.fill(n)
        b = self._table
        return Polynomial(comb(n, n - j) * b[n - j] for j in range(n + 1))

    def check_invariants(self) -> list[str]:
        """Problems with the current table; empty when it is consistent."""
        problems = []
        table = self._table
        if table[0] != 1:
            problems.append(f"B_0 = {table[0]}, expected 1")
        for j in range(3, len(table), 2):
            if table[j] != 0:
                problems.append(f"B_{j} = {table[j]}, expected 0")
        return problems


default_cache = BernoulliCache()


def bernoulli_number(n: int, cache: BernoulliCache | None = None) -> Fraction:
    return (cache or default_cache).number(n)


def bernoulli_polynomial(n: int, cache: BernoulliCache | None = None) -> Polynomial:
    return (cache or default_cache).polynomial(n)
