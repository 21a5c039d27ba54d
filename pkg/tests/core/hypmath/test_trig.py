from __future__ import annotations

import math

import numpy as np
import pytest

from apps.core.hypmath.models import HyperbolicDomainError
from apps.core.hypmath.trig import (
    alpha_prime_upper_bound,
    collar_divergence_bound,
    collar_width,
    crossing_lower_bound,
    halftrace_from_length,
    length_from_halftrace,
    pentagon_adjacent_side,
    pentagon_side,
    trirect_quad_opposite,
    zero_angle_quad_side,
)

_L1 = 2.0 * math.asinh(1.0)
_L3 = 2.0 * math.acosh(math.sqrt((7.0 + (11.0 / 3.0) * math.sqrt(11.0 / 3.0)) / 2.0))


def test_halftrace_and_length_are_inverse() -> None:
    for length in (0.1, 1.0, 2.633915794, 12.0, 55.0):
        assert length_from_halftrace(halftrace_from_length(length)) == pytest.approx(length, rel=1e-12)


def test_length_from_halftrace_rejects_values_below_one() -> None:
    with pytest.raises(HyperbolicDomainError, match=">= 1"):
        length_from_halftrace(0.5)


def test_collar_width_matches_closed_form() -> None:
    assert collar_width(_L1) == pytest.approx(math.asinh(1.0), abs=1e-12)
    assert collar_width(4.0) == pytest.approx(math.asinh(1.0 / math.sinh(2.0)), abs=1e-15)


def test_collar_width_is_tiny_but_positive_for_long_geodesics() -> None:
    width = collar_width(200.0)
    assert 0.0 < width < 1e-40


def test_crossing_lower_bound_is_fixed_point_at_l1() -> None:
    assert crossing_lower_bound(_L1, 1) == pytest.approx(_L1, abs=1e-12)
    assert crossing_lower_bound(3.0, 0) == 0.0


def test_crossing_lower_bound_rejects_negative_n() -> None:
    with pytest.raises(HyperbolicDomainError):
        crossing_lower_bound(3.0, -1)


def test_crossing_lower_bound_rejects_cusp_length() -> None:
    with pytest.raises(HyperbolicDomainError, match="positive"):
        crossing_lower_bound(0.0, 2)


def test_pentagon_side_and_adjacent_side_invert_each_other() -> None:
    rng = np.random.default_rng(7)
    for a, b in rng.uniform(0.9, 6.0, size=(50, 2)):
        c = pentagon_side(float(a), float(b))
        assert math.cosh(c) == pytest.approx(math.sinh(a) * math.sinh(b), rel=1e-12)
        assert pentagon_adjacent_side(c, float(b)) == pytest.approx(float(a), rel=1e-10)


def test_pentagon_side_rejects_degenerate_product() -> None:
    with pytest.raises(HyperbolicDomainError, match="degenerate"):
        pentagon_side(0.5, 0.5)


def test_pentagon_adjacent_side_cusp_limit_is_zero_angle_quadrilateral() -> None:
    for h in (0.2, 1.0, 3.5):
        assert pentagon_adjacent_side(0.0, h) == pytest.approx(zero_angle_quad_side(h), rel=1e-14)


def test_polygon_formulas_stay_finite_for_large_arguments() -> None:
    assert math.isfinite(pentagon_side(40.0, 35.0))
    assert pentagon_side(40.0, 35.0) == pytest.approx(40.0 + 35.0 - math.log(2.0), rel=1e-12)
    assert math.isfinite(trirect_quad_opposite(45.0, 0.0))
    assert trirect_quad_opposite(1.0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_collar_divergence_bound_separates_fitting_counts() -> None:
    ceiling = 4.0
    n = collar_divergence_bound(ceiling)
    assert crossing_lower_bound(ceiling, n) > ceiling
    assert crossing_lower_bound(ceiling, n - 1) <= ceiling


def test_alpha_prime_estimate_at_l3() -> None:
    bound = alpha_prime_upper_bound(_L3)
    assert bound == pytest.approx(4.04, abs=0.02)
    assert collar_width(bound) > 0.25
    assert collar_width(_L3) > 0.3
    assert 6.0 * collar_width(_L3) + 6.0 * collar_width(bound) > _L3


def test_alpha_prime_estimate_rejects_short_ceiling() -> None:
    with pytest.raises(HyperbolicDomainError, match="too short"):
        alpha_prime_upper_bound(0.5)


def test_alpha_prime_estimate_rejects_sub_unit_pentagon_product() -> None:
    with pytest.raises(HyperbolicDomainError, match="product"):
        alpha_prime_upper_bound(2.0)


_L2 = 2.0 * math.acosh(2.0)
_INV_ROOT_THREE = 1.0 / math.sqrt(3.0)


def test_collar_width_at_l2() -> None:
    assert collar_width(_L2) == pytest.approx(math.asinh(_INV_ROOT_THREE), abs=1e-12)
    assert collar_width(_L2) == pytest.approx(0.549306, abs=1e-6)


def test_collar_width_strictly_decreasing_for_long_geodesics() -> None:
    widths = [collar_width(length) for length in (10.0, 20.0, 40.0)]
    assert widths[0] > widths[1] > widths[2] > 0.0


def test_crossing_lower_bound_twice_around_l2() -> None:
    assert crossing_lower_bound(_L2, 2) == pytest.approx(4.0 * math.asinh(_INV_ROOT_THREE), abs=1e-12)
    assert crossing_lower_bound(_L2, 2) == pytest.approx(2.197225, abs=1e-6)


def test_pentagon_side_with_root_three_sides() -> None:
    side = math.asinh(math.sqrt(3.0))
    assert pentagon_side(side, side) == pytest.approx(math.acosh(3.0), abs=1e-12)


def test_pentagon_side_rejects_unit_product() -> None:
    with pytest.raises(HyperbolicDomainError, match="degenerate"):
        pentagon_side(math.asinh(1.0), math.asinh(1.0))


def test_trirect_quad_opposite_half_angle_case() -> None:
    result = trirect_quad_opposite(math.asinh(_INV_ROOT_THREE), math.acosh(2.0) / 2.0)
    assert result == pytest.approx(math.asinh(1.0 / math.sqrt(2.0)), abs=1e-12)


def test_zero_angle_quad_side_examples() -> None:
    assert zero_angle_quad_side(math.asinh(1.0)) == pytest.approx(math.asinh(1.0), abs=1e-12)
    assert zero_angle_quad_side(math.acosh(2.0)) == pytest.approx(math.asinh(_INV_ROOT_THREE), abs=1e-12)


def test_zero_angle_quad_side_is_collar_width_of_double() -> None:
    rng = np.random.default_rng(20240611)
    for x in rng.uniform(1e-6, 10.0, size=1000):
        assert zero_angle_quad_side(float(x)) == pytest.approx(collar_width(2.0 * float(x)), rel=1e-13)
