"""Deterministic scalar and family searches."""

import math

import pytest

from be_nonuniform import (EvaluationError, ModulusParams,
                           bikelis_constant_minorant, limit_minorant,
                           maximize_1d, nagaev_bikelis_minorant,
                           search_general, search_two_point)


def test_parabola():
    result = maximize_1d(lambda x: -(x - 1.0) ** 2, 0.0, 2.0, tol=1e-10)
    assert result.converged
    assert result.bracket <= 1e-10
    assert abs(result.argmax[0] - 1.0) <= 1e-10
    assert abs(result.value) <= 1e-18


def test_cubic_weight_ratio():
    result = maximize_1d(lambda x: (1 + x) ** 3 / (1 + x ** 3), 1e-6, 100.0, tol=1e-10)
    assert abs(result.value - 4.0) <= 1e-9
    assert abs(result.argmax[0] - 1.0) <= 1e-6


def test_minorant_optimum():
    result = maximize_1d(bikelis_constant_minorant, 0.01, 0.99, tol=1e-10)
    assert result.value >= 1.6153
    assert 0.12 <= result.argmax[0] <= 0.18


def test_bit_identical_reruns():
    runs = [maximize_1d(lambda x: math.sin(x) + 0.1 * x, -3.0, 6.0, tol=1e-12)
            for _ in range(2)]
    assert runs[0] == runs[1]


def test_value_matches_argmax():
    objective = lambda x: -(x - 0.4) ** 4 + 2.0
    result = maximize_1d(objective, 0.0, 1.0, tol=1e-9)
    assert result.value == pytest.approx(objective(result.argmax[0]), abs=1e-14)


def test_non_finite_objective_reported():
    def bad(x):
        return float("nan") if x > 0.5 else x

    with pytest.raises(EvaluationError) as err:
        maximize_1d(bad, 0.0, 1.0, tol=1e-8)
    assert err.value.point > 0.5


def test_search_two_point_interior():
    result = search_two_point(ModulusParams(1.0, 0.0), tol=1e-10)
    assert result.converged
    assert 0.06 <= result.argmax[0] <= 0.10
    assert result.value >= 1.0135
    assert result.value == pytest.approx(
        nagaev_bikelis_minorant(result.argmax[0], ModulusParams(1.0, 0.0)), abs=1e-14)

    result = search_two_point(ModulusParams(0.6, 0.0), tol=1e-10)
    assert result.value >= 1.0168


def test_search_two_point_boundary_cases():
    # at delta=0 the maximum is reached only in the small-p limit, so the
    # scan parks at the domain clip and the value reads against the limit
    result = search_two_point(ModulusParams(0.0, 0.0), tol=1e-10)
    assert result.converged
    assert result.argmax[0] <= 1e-4
    limit = limit_minorant(ModulusParams(0.0, 0.0))
    assert result.value <= limit
    assert result.value >= limit - 1e-5

    result = search_two_point(ModulusParams(0.0, 1.0), tol=1e-10)
    assert result.argmax[0] <= 1e-4
    limit = limit_minorant(ModulusParams(0.0, 1.0))
    assert limit == 0.5
    assert result.value == pytest.approx(limit, abs=1e-5)


@pytest.mark.parametrize("delta,target", [
    (0.1, 1.0061), (0.2, 1.0108), (0.3, 1.0139), (0.4, 1.0158), (0.5, 1.0167),
    (0.6, 1.0168), (0.7, 1.0164), (0.8, 1.0157), (0.9, 1.0147), (1.0, 1.0135),
])
def test_search_dominates_every_table_column(delta, target):
    result = search_two_point(ModulusParams(delta, 0.0), tol=1e-10)
    assert result.value >= target - 1e-4


def test_search_general_recovers_universal_constant():
    result = search_general("two_point_xy", ModulusParams(1.0, 0.0), "bikelis_A")
    assert result.value >= 1.6153
    # the objective is symmetric under p <-> 1-p, so either copy may win
    p = min(result.argmax[0], 1.0 - result.argmax[0])
    assert 0.12 <= p <= 0.18


def test_search_general_matches_table_row():
    result = search_general("two_point_xy", ModulusParams(1.0, 0.0), "nagaev_bikelis")
    assert result.value >= 1.0135
    p = min(result.argmax[0], 1.0 - result.argmax[0])
    assert 0.06 <= p <= 0.10


def test_pinelis_family_equivalent_to_two_point():
    a = search_general("two_point_xy", ModulusParams(1.0, 0.0), "nagaev_bikelis")
    b = search_general("pinelis_xy", ModulusParams(1.0, 0.0), "nagaev_bikelis")
    # same standardized family in two parameterizations
    assert a.value == pytest.approx(b.value, rel=1e-9)


def test_petrov_unit_weight_route_agrees():
    a = search_general("two_point_xy", ModulusParams(1.0, 0.0), "bikelis_A")
    b = search_general("two_point_xy", ModulusParams(1.0, 0.0), "petrov_constant_g")
    assert a.value == pytest.approx(b.value, rel=1e-9)


def test_three_point_contains_two_point():
    two = search_general("two_point_xy", ModulusParams(1.0, 0.0), "nagaev_bikelis",
                         coarse=(96,))
    three = search_general("three_point", ModulusParams(1.0, 0.0), "nagaev_bikelis",
                           coarse=(96, 8))
    assert three.value >= two.value - 1e-6
