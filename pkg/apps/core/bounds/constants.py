from __future__ import annotations

import math
from typing import Callable

from loguru import logger

from apps.core.bounds.models import KnownConstant, L3ExclusionCheck, UnknownConstantError
from apps.core.hypmath.models import HyperbolicDomainError, Length
from apps.core.hypmath.roots import bisect_increasing, golden_section_minimize
from apps.core.hypmath.trig import alpha_prime_upper_bound, collar_width
from apps.core.torus.models import TraceTriple

_ELEVEN_THIRDS_ROOT = math.sqrt(11.0 / 3.0)

# Symbolic closed forms, evaluated on demand at full double precision.
_CLOSED_FORMS: dict[int, tuple[str, Callable[[], Length]]] = {
    1: ("2*arcsinh(1)", lambda: 2.0 * math.asinh(1.0)),
    2: ("2*arccosh(2)", lambda: 2.0 * math.acosh(2.0)),
    3: (
        "2*arccosh(sqrt((7+(11/3)*sqrt(11/3))/2))",
        lambda: 2.0 * math.acosh(math.sqrt((7.0 + (11.0 / 3.0) * _ELEVEN_THIRDS_ROOT) / 2.0)),
    ),
}

FOUR_HOLED_SPHERE_LABEL = "4*arcsinh(1)"
B_SQUARED_MINIMIZER = (3.0 + _ELEVEN_THIRDS_ROOT) / 4.0


def known_constant(n: int) -> KnownConstant:
    try:
        label, evaluate = _CLOSED_FORMS[n]
    except KeyError:
        raise UnknownConstantError(f"no closed form for L_{n}; known for n in 1..3") from None
    return KnownConstant(n=n, label=label, value=evaluate())


def known_L(n: int) -> Length:
    """Sharp minimal max-length of two simple closed geodesics crossing n times (n <= 3)."""
    return known_constant(n).value


def has_known_L(n: int) -> bool:
    return n in _CLOSED_FORMS


def four_holed_sphere_bound() -> Length:
    # Equals 2*arccosh(3).
    return 4.0 * math.asinh(1.0)


def s3_triple() -> TraceTriple:
    """
    Half-traces of the torus realizing L_3.

    r = (3 + sqrt(11/3)) / 4 and s = t = sqrt((13 + 7 sqrt(11/3)) / 8); the
    thrice-crossing partner of the two equal geodesics has half-trace s(2r - 1).
    """
    r = B_SQUARED_MINIMIZER
    s = math.sqrt((13.0 + 7.0 * _ELEVEN_THIRDS_ROOT) / 8.0)
    return TraceTriple(r, s, s)


def b_squared_curve(r: float) -> float:
    if r <= 1.0:
        raise HyperbolicDomainError("b^2 curve needs r > 1")
    return r * r * (2.0 * r - 1.0) ** 2 / (2.0 * (r - 1.0))


def b_squared_slope(r: float) -> float:
    if r <= 1.0:
        raise HyperbolicDomainError("b^2 curve needs r > 1")
    return r * (2.0 * r - 1.0) * (6.0 * r * r - 9.0 * r + 2.0) / (2.0 * (r - 1.0) ** 2)


def locate_b_squared_minimum(lo: float = 1.001, hi: float = 10.0) -> tuple[float, float]:
    """
    Numerical minimizer of the b^2 curve on [lo, hi]; returns (r, b^2).

    Golden-section search finds the basin, then the sign change of the
    analytic slope pins the argmin below the flat-minimum resolution limit.
    """
    if lo <= 1.0 or hi <= lo:
        raise HyperbolicDomainError("search interval must satisfy 1 < lo < hi")
    x, _ = golden_section_minimize(b_squared_curve, lo, hi)
    bracket = (max(lo, x - 1e-3), min(hi, x + 1e-3))
    try:
        left, right = bisect_increasing(b_squared_slope, *bracket)
    except HyperbolicDomainError:
        left, right = bisect_increasing(b_squared_slope, lo, hi)
    argmin = 0.5 * (left + right)
    logger.debug("b^2 minimum golden={!r} refined={!r}", x, argmin)
    return argmin, b_squared_curve(argmin)


def verify_l3_exclusion() -> L3ExclusionCheck:
    ceiling = known_L(3)
    alpha_prime = alpha_prime_upper_bound(ceiling)
    width_alpha = collar_width(ceiling)
    width_alpha_prime = collar_width(alpha_prime)
    return L3ExclusionCheck(
        ceiling=ceiling,
        alpha_prime_bound=alpha_prime,
        width_alpha=width_alpha,
        width_alpha_prime=width_alpha_prime,
        collar_sum=6.0 * width_alpha + 6.0 * width_alpha_prime,
    )
