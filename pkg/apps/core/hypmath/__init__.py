"""Hyperbolic trigonometry kernels, collar quantities and the l_n solver."""
from apps.core.hypmath.models import (
    DEFAULT_TOL,
    CollarWidth,
    HalfTrace,
    HyperbolicDomainError,
    Length,
    RootNotConvergedError,
    ensure_halftrace,
    ensure_length,
)
from apps.core.hypmath.roots import (
    bisect_increasing,
    golden_section_minimize,
    ln_residual,
    newton_polish,
    solve_ln,
)
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

__all__ = [
    "DEFAULT_TOL",
    "CollarWidth",
    "HalfTrace",
    "Length",
    "HyperbolicDomainError",
    "RootNotConvergedError",
    "ensure_halftrace",
    "ensure_length",
    "bisect_increasing",
    "golden_section_minimize",
    "ln_residual",
    "newton_polish",
    "solve_ln",
    "alpha_prime_upper_bound",
    "collar_divergence_bound",
    "collar_width",
    "crossing_lower_bound",
    "halftrace_from_length",
    "length_from_halftrace",
    "pentagon_adjacent_side",
    "pentagon_side",
    "trirect_quad_opposite",
    "zero_angle_quad_side",
]
