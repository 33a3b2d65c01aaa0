from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import interpolate_power_sum
from powersums.exact_poly import Polynomial, from_ints
from powersums.powersum import (
    BERNOULLI,
    RECURRENCE,
    brute_force_sum,
    check_eq1_chain,
    check_eq6,
    faulhaber,
    power_sum_recurrence,
    star,
    star_integral,
)

X = Polynomial.x()

# Closed forms printed in the worked examples, as (integer numerator, denominator).
WORKED = {
    1: ([0, 1, 1], 2),
    2: ([0, 1, 3, 2], 6),
    3: ([0, 0, 1, 2, 1], 4),
    4: ([0, -1, 0, 10, 15, 6], 30),
    5: ([0, 0, -1, 0, 5, 6, 2], 12),
    6: ([0, 1, 0, -7, 0, 21, 21, 6], 42),
}

polys = st.lists(st.integers(-9, 9), max_size=13).map(Polynomial)
rationals = st.builds(F, st.integers(-20, 20), st.integers(1, 12))


def test_star_examples():
    assert star(Polynomial.constant(1)) == Polynomial()
    assert star(X) == Polynomial([0, -1, 1]) / 2
    p = Polynomial([0, 1, 1])
    expected = Polynomial([0, -1, 0, 1]) / 3 + Polynomial([0, -1, 1]) / 2
    assert star(p) == expected == star_integral(p)


@given(polys)
def test_star_routes_agree(p):
    assert star(p) == star_integral(p)


@given(polys, polys, rationals, rationals)
def test_star_linear(p, q, a, b):
    assert star(p * a + q * b) == star(p) * a + star(q) * b


@given(polys)
def test_star_vanishes_at_zero_and_one(p):
    s = star(p)
    assert s(0) == 0 and s(1) == 0


def test_recurrence_base_case():
    s = power_sum_recurrence(0)
    assert s.poly == X
    assert s.method == RECURRENCE


@pytest.mark.parametrize("n", sorted(WORKED))
def test_recurrence_reproduces_worked_examples(n):
    assert power_sum_recurrence(n).poly == from_ints(*WORKED[n])


@pytest.mark.parametrize("n", sorted(WORKED))
def test_faulhaber_reproduces_worked_examples(n):
    s = faulhaber(n)
    assert s.method == BERNOULLI
    assert s.poly == from_ints(*WORKED[n])


def test_faulhaber_rejects_zero():
    with pytest.raises(ValueError, match="power_sum_recurrence"):
        faulhaber(0)


def test_faulhaber_at_zero_would_be_off_by_one():
    # the closed form evaluated at n = 0 gives m + 1
    from powersums.bernoulli import bernoulli_number, bernoulli_polynomial

    raw = bernoulli_polynomial(1).shift(1) - bernoulli_number(1)
    assert raw == X + 1


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 17])
def test_recurrence_matches_interpolation_oracle(n):
    assert list(power_sum_recurrence(n).poly.coeffs) == interpolate_power_sum(n)


def test_cross_method_to_50():
    for n in range(1, 51):
        assert power_sum_recurrence(n).poly == faulhaber(n).poly


def test_brute_force():
    assert brute_force_sum(2, 3) == 14
    assert brute_force_sum(0, 5) == 5
    assert brute_force_sum(6, 10) == 1978405
    assert brute_force_sum(3, 0) == 0
    assert from_ints(*WORKED[6])(10) == 1978405


@pytest.mark.parametrize("n", range(0, 31))
def test_structure(n):
    for s in (power_sum_recurrence(n),) + ((faulhaber(n),) if n else ()):
        assert s.structural_problems() == []
        if n >= 1:
            assert s.poly.coeff(n) == F(1, 2)
        assert s.poly - s.poly.shift(-1) == Polynomial.monomial(n)


def test_degree_is_n_plus_one_not_m_plus_one():
    for n in range(1, 7):
        assert power_sum_recurrence(n).poly.degree == n + 1


def test_check_eq6():
    r0 = check_eq6(0)
    assert r0.holds and r0.lhs == Polynomial() and r0.rhs == Polynomial()
    r1 = check_eq6(1)
    assert r1.holds and r1.lhs == Polynomial([0, -1, 1]) / 2
    r30 = check_eq6(30)
    assert r30.holds and r30.difference.is_zero()


def test_check_eq1_chain():
    r1 = check_eq1_chain(1)
    assert r1.holds and r1.lhs == Polynomial([0, -1, 1]) / 2
    r4 = check_eq1_chain(4)
    assert r4.holds and r4.rhs == from_ints(*WORKED[4]) - X
    assert check_eq1_chain(25).holds
    with pytest.raises(ValueError):
        check_eq1_chain(0)


def test_recurrence_memo_is_stable():
    first = power_sum_recurrence(12).poly
    power_sum_recurrence(30)
    assert power_sum_recurrence(12).poly == first
