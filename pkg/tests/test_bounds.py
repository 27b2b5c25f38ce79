"""Deviation evaluation, rhs coefficients, form identities and suprema."""

import math

import numpy as np
import pytest

from be_nonuniform import (REFERENCE, Constant, DomainError, LowerEnvelope,
                           Power, SummandSystem, Tabulated, delta_n,
                           evaluate_bound, lyapounov, make_pinelis,
                           make_two_point, phi_cdf, phi_tail, ratio_sup_weight,
                           rhs_bikelis_integral, rhs_bikelis_min,
                           rhs_bikelis_split, rhs_nagaev_bikelis, rhs_petrov,
                           rhs_structural, standardize, sum_law,
                           weighted_sup_delta)
from be_nonuniform.verify import SplitMix64, draw_system


def one_summand(p):
    return SummandSystem((make_two_point(p),))


def random_cases(seed, count, xs_per=5):
    cases = []
    for i in range(count):
        rng = SplitMix64(seed, counter=i << 20)
        system = draw_system(rng)
        xs = [rng.uniform_in(-8.0, 8.0) for _ in range(xs_per)]
        cases.append((system, xs))
    return cases


# ---------------------------------------------------------------------------
# delta_n
# ---------------------------------------------------------------------------

def test_delta_n_at_two_point_atom():
    for p in (0.02, 0.08, 0.15, 0.5, 0.9):
        q = 1.0 - p
        x = math.sqrt(q / p)
        system = one_summand(p)
        assert delta_n(system, x, "strict") == pytest.approx(
            abs(q - phi_cdf(x)), abs=1e-15)


def test_delta_n_simple_values():
    system = one_summand(0.5)
    assert delta_n(system, 1.0, "strict") == pytest.approx(
        phi_cdf(1.0) - 0.5, abs=1e-15)
    assert delta_n(system, 1.0, "weak") == pytest.approx(
        1.0 - phi_cdf(1.0), abs=1e-15)
    # beyond the last atom the CDF saturates and only the normal tail remains
    assert delta_n(system, 4.0, "strict") == pytest.approx(phi_tail(4.0), rel=1e-12)
    with pytest.raises(DomainError):
        delta_n(system, 1.0, "sideways")


def test_delta_n_max_dominates():
    for system, xs in random_cases(11, 10):
        for x in xs:
            m = delta_n(system, x, "max")
            assert m >= delta_n(system, x, "strict") - 1e-18
            assert m >= delta_n(system, x, "weak") - 1e-18


# ---------------------------------------------------------------------------
# rhs coefficients
# ---------------------------------------------------------------------------

def test_rhs_nagaev_bikelis_values():
    system = one_summand(0.08)
    x = math.sqrt(0.92 / 0.08)
    assert rhs_nagaev_bikelis(system, x, 1.0) == pytest.approx(
        0.07858971132150841, rel=1e-13)
    assert rhs_nagaev_bikelis(system, 0.0, 1.0) == pytest.approx(
        3.143462505222407, rel=1e-13)
    for x in (0.5, 2.0):
        assert rhs_nagaev_bikelis(system, x, 0.0) == pytest.approx(
            1.0 / (1.0 + x * x), rel=1e-14)


def test_rhs_bikelis_min_values():
    assert rhs_bikelis_min(one_summand(0.5), 0.0) == pytest.approx(1.0, abs=1e-14)
    assert rhs_bikelis_min(one_summand(0.08), 0.0) == pytest.approx(
        0.9435907129847836, rel=1e-13)
    # cutoff above every atom: pure third-moment form
    system = one_summand(0.08)
    x = 5.0
    expected = 3.143462505222407 / (1 + x) ** 3
    assert rhs_bikelis_min(system, x) == pytest.approx(expected, rel=1e-12)
    assert rhs_bikelis_split(system, x) == pytest.approx(expected, rel=1e-12)


def test_form_identities_on_seeded_systems():
    for system, xs in random_cases(13, 60):
        for x in xs:
            v_min = rhs_bikelis_min(system, x)
            v_split = rhs_bikelis_split(system, x)
            v_int = rhs_bikelis_integral(system, x)
            assert v_split == pytest.approx(v_min, rel=1e-12)
            assert v_int == pytest.approx(v_min, rel=1e-12)


def test_petrov_reduction_to_min_form():
    for system, xs in random_cases(17, 40):
        for x in xs:
            envelope = LowerEnvelope((1.0 + abs(x)) * system.bn)
            assert rhs_petrov(system, x, envelope) == pytest.approx(
                rhs_bikelis_min(system, x), rel=1e-12)


def test_petrov_constant_weight():
    system = one_summand(0.3)
    for x in (0.0, 1.3, -2.7):
        assert rhs_petrov(system, x, Constant()) == pytest.approx(
            1.0 / (1.0 + abs(x)) ** 2, rel=1e-13)


def test_petrov_power_weight_closed_form_and_domination():
    for system, xs in random_cases(19, 20):
        for x in xs:
            for delta in (0.2, 0.7, 1.0):
                got = rhs_petrov(system, x, Power(delta))
                expected = lyapounov(system, delta) / (1.0 + abs(x)) ** (2.0 + delta)
                assert got == pytest.approx(expected, rel=1e-12)
                floor = rhs_nagaev_bikelis(system, x, delta) / 2.0 ** (1.0 + delta)
                assert got >= floor * (1.0 - 1e-12)


def test_petrov_scale_invariance():
    xs_grid = np.geomspace(1e-3, 1e3, 9)
    base = Tabulated(xs_grid, np.sqrt(xs_grid))
    scaled = Tabulated(xs_grid, 7.3 * np.sqrt(xs_grid))
    system = SummandSystem((standardize(make_pinelis(0.23)),))
    for x in (0.2, 1.0, 40.0):
        a = rhs_petrov(system, x, base)
        b = rhs_petrov(system, x, scaled)
        assert a == pytest.approx(b, rel=1e-12)


def test_rhs_structural():
    system = one_summand(0.08)
    L = 3.143462505222407
    assert rhs_structural(system, 1.0, 0.0) == pytest.approx(L, rel=1e-13)
    assert rhs_structural(system, 1.0, 1.0) == pytest.approx(L + 1.0, rel=1e-13)
    assert rhs_structural(system, 0.3, 2.0) == pytest.approx(
        lyapounov(system, 0.3) + 2.0, rel=1e-12)
    with pytest.raises(DomainError):
        rhs_structural(system, 1.0, -0.5)


# ---------------------------------------------------------------------------
# suprema
# ---------------------------------------------------------------------------

def test_ratio_sup_weight():
    for delta in (0.0, 0.25, 0.5, 0.75, 1.0):
        value, argmax = ratio_sup_weight(delta)
        assert abs(value - 2.0 ** (1.0 + delta)) <= 1e-9
        assert abs(argmax - 1.0) <= 1e-6
    with pytest.raises(DomainError):
        ratio_sup_weight(1.2)


def test_weighted_sup_two_point_008():
    system = one_summand(0.08)
    value, arg_x = weighted_sup_delta(system, 1.0)
    t = math.sqrt(0.92 / 0.08)
    atom_value = (1.0 + t ** 3) * abs(0.92 - phi_cdf(t))
    assert value >= atom_value - 1e-12
    assert arg_x == pytest.approx(t, abs=1e-9)


def test_weighted_sup_symmetric_case():
    system = one_summand(0.5)
    value, arg_x = weighted_sup_delta(system, 1.0)
    assert value == pytest.approx(2.0 * (phi_cdf(1.0) - 0.5), rel=1e-12)
    assert abs(arg_x) == pytest.approx(1.0, abs=1e-9)


def test_weighted_sup_against_dense_grid_oracle():
    system = SummandSystem((make_two_point(0.3), make_two_point(0.7)))
    delta = 0.0
    value, _ = weighted_sup_delta(system, delta)
    law = sum_law(system)
    grid = np.concatenate([np.linspace(-12.0, 12.0, 50001),
                           law.values / system.bn])
    oracle = max((1.0 + x * x) * delta_n(system, float(x), "max") for x in grid)
    assert value >= oracle - 1e-12
    assert value == pytest.approx(oracle, abs=1e-6)


def test_weighted_sup_accepts_explicit_grid():
    system = one_summand(0.2)
    xs = np.linspace(-6, 6, 1001)
    v_default, _ = weighted_sup_delta(system, 0.5)
    v_grid, _ = weighted_sup_delta(system, 0.5, x_grid=xs)
    assert v_grid >= v_default - 1e-12


# ---------------------------------------------------------------------------
# evaluation records and reference constants
# ---------------------------------------------------------------------------

def test_evaluate_bound_invariants():
    ev = evaluate_bound(1.5, 0.2, 0.05, 10.0)
    assert ev.rhs == pytest.approx(0.5, abs=1e-15)
    assert ev.satisfied
    ev = evaluate_bound(1.5, 0.51, 0.05, 10.0)
    assert not ev.satisfied  # zero-tolerance comparison
    with pytest.raises(DomainError):
        evaluate_bound(0.0, 0.1, 0.1, 0.0)


def test_reference_constants_table():
    assert REFERENCE.k0(1.0) == 21.82
    assert REFERENCE.k0(1.0, iid=True) == 17.36
    assert REFERENCE.k0(0.1) == 11.67
    assert REFERENCE.a_general == 47.65
    assert REFERENCE.a_iid == 39.32
    assert REFERENCE.a_general_far == 29.62
    assert REFERENCE.a_iid_far == 24.13
    assert len(REFERENCE.table1) == 10
    assert REFERENCE.row(0.6).s1_noniid == 0.859
    with pytest.raises(DomainError):
        REFERENCE.k0(0.55)


def test_structural_constant_selection():
    # beyond the optimizing s the table value applies; below it only the
    # s=0 constant is published (and stays valid)
    assert REFERENCE.structural_constant(1.0, 1.0) == 18.19
    assert REFERENCE.structural_constant(1.0, 2.5) == 18.19
    assert REFERENCE.structural_constant(1.0, 0.5) == 21.82
    assert REFERENCE.structural_constant(1.0, 0.646, iid=True) == 15.70
    assert REFERENCE.structural_constant(1.0, 0.5, iid=True) == 17.36
