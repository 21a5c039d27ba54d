from __future__ import annotations

import math

import pytest

from apps.core.bounds.constants import (
    B_SQUARED_MINIMIZER,
    b_squared_curve,
    b_squared_slope,
    four_holed_sphere_bound,
    known_constant,
    known_L,
    locate_b_squared_minimum,
    s3_triple,
    verify_l3_exclusion,
)
from apps.core.bounds.models import UnknownConstantError
from apps.core.hypmath.models import HyperbolicDomainError
from apps.core.torus.fricke import cusp_relation_residual, normalize
from apps.core.torus.spectrum import pairs_with_intersection
from apps.core.torus.twist import min_two_crossing_partner

_ROOT = math.sqrt(11.0 / 3.0)
_B_SQUARED_MIN = (7.0 + (11.0 / 3.0) * _ROOT) / 2.0


def test_known_constants() -> None:
    assert known_L(1) == pytest.approx(1.762747174, abs=1e-9)
    assert known_L(2) == pytest.approx(2.633915794, abs=1e-9)
    assert known_L(3) == pytest.approx(3.2582, abs=1e-3)
    assert math.cosh(known_L(3) / 2.0) == pytest.approx(2.6477, abs=1e-3)


def test_known_constant_labels_are_symbolic() -> None:
    assert known_constant(1).label == "2*arcsinh(1)"
    assert known_constant(2).label == "2*arccosh(2)"
    assert "11/3" in known_constant(3).label


def test_known_l_is_undefined_beyond_three() -> None:
    with pytest.raises(UnknownConstantError, match="L_4"):
        known_L(4)


def test_known_l2_is_fixed_point_of_two_crossing_formula() -> None:
    assert min_two_crossing_partner(known_L(2), 0.0) == pytest.approx(known_L(2), abs=1e-12)


def test_four_holed_sphere_bound() -> None:
    value = four_holed_sphere_bound()
    assert value == pytest.approx(3.525494348, abs=1e-9)
    assert abs(value - 2.0 * math.acosh(3.0)) < 1e-12
    assert value > known_L(2)


def test_s3_triple_values() -> None:
    triple = s3_triple()
    assert triple.r == pytest.approx(1.22871, abs=1e-5)
    assert triple.s == triple.t == pytest.approx(1.81673, abs=1e-5)
    assert abs(cusp_relation_residual(*triple.as_tuple())) < 1e-10
    assert triple.s * (2.0 * triple.r - 1.0) == pytest.approx(math.sqrt(_B_SQUARED_MIN), abs=1e-10)


def test_s3_triple_is_already_normalized() -> None:
    triple = s3_triple()
    assert normalize(triple).as_tuple() == pytest.approx(triple.as_tuple(), rel=1e-15)


def test_s3_triple_realizes_l3() -> None:
    pairs = pairs_with_intersection(s3_triple(), 3, known_L(3) + 1e-6)
    assert pairs
    assert min(pair.max_length for pair in pairs) == pytest.approx(known_L(3), abs=1e-8)


def test_b_squared_curve_minimum() -> None:
    assert b_squared_curve(B_SQUARED_MINIMIZER) == pytest.approx(_B_SQUARED_MIN, rel=1e-12)
    critical = 6.0 * B_SQUARED_MINIMIZER**2 - 9.0 * B_SQUARED_MINIMIZER + 2.0
    assert abs(critical) < 1e-10
    assert b_squared_slope(1.1) < 0.0 < b_squared_slope(1.5)


def test_b_squared_curve_domain() -> None:
    with pytest.raises(HyperbolicDomainError, match="r > 1"):
        b_squared_curve(1.0)
    with pytest.raises(HyperbolicDomainError, match="r > 1"):
        b_squared_slope(0.5)


def test_locate_b_squared_minimum_hits_closed_form() -> None:
    argmin, value = locate_b_squared_minimum()
    assert abs(argmin - B_SQUARED_MINIMIZER) < 1e-8
    assert value == pytest.approx(_B_SQUARED_MIN, rel=1e-12)


def test_l3_exclusion_checks_hold() -> None:
    check = verify_l3_exclusion()
    assert check.alpha_prime_bound == pytest.approx(4.04, abs=0.02)
    assert check.width_alpha_prime > 0.25
    assert check.width_alpha > 0.3
    assert check.collar_sum > check.ceiling
    assert check.holds
