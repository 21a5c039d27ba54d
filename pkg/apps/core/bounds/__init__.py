"""Closed-form L_n constants, the construction upper bound and the sandwich check."""
from apps.core.bounds.constants import (
    B_SQUARED_MINIMIZER,
    FOUR_HOLED_SPHERE_LABEL,
    b_squared_curve,
    b_squared_slope,
    four_holed_sphere_bound,
    has_known_L,
    known_constant,
    known_L,
    locate_b_squared_minimum,
    s3_triple,
    verify_l3_exclusion,
)
from apps.core.bounds.construction import (
    collar_bound_table,
    construction_recursion,
    construction_upper_bound,
    sandwich_report,
)
from apps.core.bounds.models import (
    BoundsReport,
    KnownConstant,
    L3ExclusionCheck,
    UnknownConstantError,
)

__all__ = [
    "B_SQUARED_MINIMIZER",
    "FOUR_HOLED_SPHERE_LABEL",
    "b_squared_curve",
    "b_squared_slope",
    "four_holed_sphere_bound",
    "has_known_L",
    "known_constant",
    "known_L",
    "locate_b_squared_minimum",
    "s3_triple",
    "verify_l3_exclusion",
    "collar_bound_table",
    "construction_recursion",
    "construction_upper_bound",
    "sandwich_report",
    "BoundsReport",
    "KnownConstant",
    "L3ExclusionCheck",
    "UnknownConstantError",
]
