from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orblab.errors import ValidationError
from orblab.groups import build_group, cycle_index
from orblab.orbits import bn_table
from orblab.series import (
    CycleIndex,
    CycleType,
    TruncatedSeries,
    cycle_index_character,
    e8_theta,
    e8cubed_character,
    eta_product,
    series_arith,
    sym_limit_character,
)

T = TruncatedSeries.from_coeffs


def test_series_arith_examples():
    assert series_arith(T([1, 1], 2), T([1, 1], 2), "mul").as_ints() == [1, 2, 1]
    assert series_arith(T([1, -1], 3), op="recip").as_ints() == [1, 1, 1, 1]
    assert series_arith(T([1, 744], 2), op="pow", k=2)[2] == 553536


def test_truncation_takes_min_order():
    s = T([1, 2, 3], 2) + T([1, 1], 1)
    assert s.order == 1
    assert (T([1, 2, 3], 2) * T([1, 1], 1)).order == 1


def test_recip_zero_constant():
    with pytest.raises(ZeroDivisionError):
        T([0, 1], 3).recip()


def test_subs_power_refuses_unknown_terms():
    with pytest.raises(ValueError):
        T([1, 1], 1).subs_power(2, 4)
    assert T([1, 1], 2).subs_power(2, 5).as_ints() == [1, 0, 1, 0, 0, 0]


series_st = st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(lambda c: T(c, 5))


@given(series_st, series_st, series_st)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_st)
def test_recip_inverts(a):
    if a[0] == 0:
        return
    assert a * a.recip() == TruncatedSeries.one(5)


@given(series_st)
def test_json_round_trip(a):
    assert TruncatedSeries.from_json(a.to_json()) == a


def test_s2_character():
    Z = CycleIndex(2, {CycleType(((1, 2),)): Fraction(1, 2), CycleType(((2, 1),)): Fraction(1, 2)})
    assert cycle_index_character(Z, T([1, 1], 2), 2).as_ints() == [1, 1, 1]


def test_gl22_character():
    Z = cycle_index(build_group("GL", 2, 2))
    assert cycle_index_character(Z, T([1, 1], 4), 4).as_ints() == [1, 2, 2, 2, 1]


def test_trivial_seed_gives_one():
    Z = cycle_index(build_group("Z", 6))
    assert cycle_index_character(Z, T([1], 5), 5).as_ints() == [1, 0, 0, 0, 0, 0]


def test_corrupted_cycle_index_detected():
    Z = CycleIndex(2, {CycleType(((1, 2),)): Fraction(1, 3), CycleType(((2, 1),)): Fraction(2, 3)})
    with pytest.raises(ValidationError):
        cycle_index_character(Z, T([1, 1], 2), 2)


def test_seed_needs_unit_constant_term():
    Z = cycle_index(build_group("S", 2))
    with pytest.raises(ValueError):
        cycle_index_character(Z, T([2, 1], 2), 2)


def test_cycle_index_validation():
    with pytest.raises(ValueError):
        CycleIndex(2, {CycleType(((1, 2),)): Fraction(1, 2)})
    with pytest.raises(ValueError):
        CycleIndex(3, {CycleType(((1, 2),)): Fraction(1)})


def test_cycle_index_json_round_trip():
    Z = cycle_index(build_group("GL", 2, 2))
    assert CycleIndex.from_json(Z.to_json()) == Z
    assert Z.evaluate(lambda k: 1) == 1


def _sigma3(n):
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def test_e8_theta_against_eisenstein():
    # independent oracle: theta_E8 = E_4 = 1 + 240 sum sigma_3(n) q^n
    th = e8_theta(6).as_ints()
    assert th == [1] + [240 * _sigma3(n) for n in range(1, 7)]


def test_e8cubed_coefficients():
    a = e8cubed_character(4).as_ints()
    assert a == [1, 744, 196884, 21493760, 864299970]


def test_eta_product_pentagonal():
    # Euler: prod (1 - t^n) = 1 - t - t^2 + t^5 + t^7 - ...
    assert eta_product(8).as_ints() == [1, -1, -1, 0, 0, 1, 0, 1, 0]


def test_sym_limit_examples():
    assert sym_limit_character(T([1, 1], 6), 6).as_ints() == [1] * 7
    assert sym_limit_character(T([1, 1, 1], 4), 4)[4] == 3
    # multisets of size 2 from 744 labels: 744 * 745 / 2
    assert sym_limit_character(T([1, 744], 2), 2)[2] == 277140


def test_sym_limit_rejects_negative():
    with pytest.raises(ValueError):
        sym_limit_character(T([1, -1], 3), 3)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(1, 5))
def test_sym_limit_matches_finite_sn(tail, N):
    a = T([1] + tail, 5)
    lim = sym_limit_character(a, 5)
    b = bn_table(build_group("S", N), a, 5).counts()
    for n in range(min(N, 5) + 1):
        assert b[n] == lim[n]
