import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twozero import ParameterError
from twozero.charsum import (CyclotomicIntegerValue, character_sum, gaussian_period,
                             gaussian_period_closed_form_N2)

from conftest import field


def _float_sum(t, elems):
    """Independent floating-point evaluation with chi(x) = exp(2 pi i Tr(x) / p)."""
    return sum(cmath.exp(2j * math.pi * int(t.trace_p(int(x))) / t.p) for x in elems)


def test_empty_and_full_sums(gf49):
    assert character_sum(gf49, []) == CyclotomicIntegerValue.zero(7)
    full = character_sum(gf49, gf49.nonzero())
    assert full.is_rational() and full.rational_value() == -1
    assert character_sum(gf49, gf49.elements()).rational_value() == 0


def test_quadratic_periods_gf49(gf49):
    eta0 = gaussian_period(gf49, 2, 0)
    eta1 = gaussian_period(gf49, 2, 1)
    assert eta0.rational_value() == 3
    assert eta1.rational_value() == -4
    assert (eta0 + eta1).rational_value() == -1


def test_period_order_one_is_minus_one(gf49):
    assert gaussian_period(gf49, 1, 0).rational_value() == -1


@pytest.mark.parametrize("N", [1, 2, 3, 4, 6, 8, 12, 16, 24, 48])
def test_periods_sum_to_minus_one(gf49, N):
    total = CyclotomicIntegerValue.zero(7)
    for i in range(N):
        total = total + gaussian_period(gf49, N, i)
    assert total.rational_value() == -1


@pytest.mark.parametrize("psm", [(7, 1, 2), (3, 1, 3), (5, 1, 2), (2, 1, 4), (13, 1, 2)])
@pytest.mark.parametrize("N", [2, 3])
def test_exact_value_matches_floating_point(psm, N):
    t = field(*psm)
    if (t.r - 1) % N:
        pytest.skip("N does not divide r - 1")
    from twozero.ffield import cyclotomic_class
    for i in range(N):
        cls = cyclotomic_class(t, N, i)
        assert abs(gaussian_period(t, N, i).to_complex() - _float_sum(t, cls)) < 1e-9


def test_closed_form_examples():
    assert gaussian_period_closed_form_N2(7, 1, 2) == (3, -4)
    assert gaussian_period_closed_form_N2(5, 1, 2) == (-3, 2)
    assert gaussian_period_closed_form_N2(3, 1, 2) == (1, -2)


@pytest.mark.parametrize("psm", [(3, 1, 2), (3, 2, 1), (3, 1, 4), (3, 2, 2), (5, 1, 2), (5, 2, 1),
                                 (7, 1, 2), (11, 1, 2), (13, 1, 2), (5, 1, 4), (3, 3, 2)])
def test_closed_form_matches_exhaustive(psm):
    t = field(*psm)
    eta0, eta1 = gaussian_period_closed_form_N2(*psm)
    assert eta0 + eta1 == -1
    assert gaussian_period(t, 2, 0).rational_value() == eta0
    assert gaussian_period(t, 2, 1).rational_value() == eta1


def test_closed_form_refuses_odd_degree():
    with pytest.raises(ParameterError, match="non-real"):
        gaussian_period_closed_form_N2(7, 1, 1)
    with pytest.raises(ParameterError, match="irrational"):
        gaussian_period_closed_form_N2(5, 1, 3)
    with pytest.raises(ParameterError):
        gaussian_period_closed_form_N2(2, 1, 2)


def test_odd_degree_periods_are_not_rational():
    # p = 3 mod 4 with odd degree: eta_0 = (-1 + i sqrt(p^k)) / 2 style, not real
    t = field(7, 1, 1)
    v = gaussian_period(t, 2, 0)
    assert not v.is_rational()
    assert abs(v.to_complex().imag) > 1


def test_canonical_form_and_equality():
    a = CyclotomicIntegerValue(5, (3, 1, 1, 1, 1))
    b = CyclotomicIntegerValue(5, (2, 0, 0, 0, 0))
    assert a == b and hash(a) == hash(b)
    assert a.coeffs == (2, 0, 0, 0, 0)
    assert a.rational_value() == 2
    c = CyclotomicIntegerValue(5, (0, 1, 0, 0, 0))
    assert not c.is_rational()
    with pytest.raises(ParameterError):
        c.rational_value()
    with pytest.raises(ParameterError):
        CyclotomicIntegerValue(5, (1, 2))


def test_integer_arithmetic_on_values():
    v = CyclotomicIntegerValue.from_int(7, 3)
    assert (v * 3).rational_value() == 9
    assert (v + 2).rational_value() == 5
    assert (v - CyclotomicIntegerValue.from_int(7, 4)).rational_value() == -1
    assert CyclotomicIntegerValue.from_int(7, Fraction(6, 2)) == v
    with pytest.raises(ParameterError):
        CyclotomicIntegerValue.from_int(7, Fraction(1, 2))
    with pytest.raises(ParameterError):
        v + CyclotomicIntegerValue.from_int(5, 1)


def test_json_round_trip():
    v = CyclotomicIntegerValue(7, (0, 0, -1, 2, 2, -1, 0))
    assert v.to_json() == {"p": 7, "coeffs": [0, 0, -1, 2, 2, -1, 0]}
    assert CyclotomicIntegerValue.from_json(v.to_json()) == v


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 48), max_size=49))
def test_complement_sums_to_zero(subset):
    t = field(7, 1, 2)
    rest = [x for x in range(t.r) if x not in subset]
    total = character_sum(t, sorted(subset)) + character_sum(t, rest)
    assert total == CyclotomicIntegerValue.zero(7)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.integers(-3, 3))
def test_canonical_equality_is_value_equality(x, y, shift):
    # shifting a histogram by a constant does not change the value
    a = CyclotomicIntegerValue(3, tuple(x))
    b = CyclotomicIntegerValue(3, tuple(c + shift for c in x))
    assert a == b
    assert (a == CyclotomicIntegerValue(3, tuple(y))) == (abs(a.to_complex() - CyclotomicIntegerValue(3, tuple(y)).to_complex()) < 1e-9)
