from __future__ import annotations

import math

from loguru import logger

from apps.core.hypmath.models import (
    CollarWidth,
    HalfTrace,
    HyperbolicDomainError,
    Length,
    ensure_halftrace,
    ensure_length,
)

# Above this argument cosh/sinh products are carried in log space.
_LARGE_ARG = 30.0
_LOG_TWO = math.log(2.0)
_DEGENERATE_LOG_TOL = 1e-12


def _log_sinh(x: float) -> float:
    if x > _LARGE_ARG:
        return x - _LOG_TWO + math.log1p(-math.exp(-2.0 * x))
    return math.log(math.sinh(x))


def _log_cosh(x: float) -> float:
    if x > _LARGE_ARG:
        return x - _LOG_TWO + math.log1p(math.exp(-2.0 * x))
    return math.log(math.cosh(x))


def _arccosh_of_exp(log_value: float) -> float:
    if log_value > _LARGE_ARG:
        return log_value + math.log1p(math.sqrt(1.0 - math.exp(-2.0 * log_value)))
    return math.acosh(math.exp(log_value))


def _arcsinh_of_exp(log_value: float) -> float:
    if log_value > _LARGE_ARG:
        return log_value + math.log1p(math.sqrt(1.0 + math.exp(-2.0 * log_value)))
    return math.asinh(math.exp(log_value))


def _inv_sinh(x: float) -> float:
    if x > _LARGE_ARG:
        return 2.0 * math.exp(-x) / -math.expm1(-2.0 * x)
    return 1.0 / math.sinh(x)


def halftrace_from_length(length: Length) -> HalfTrace:
    value = ensure_length(length, allow_cusp=True)
    half = value / 2.0
    if half > 700.0:
        raise HyperbolicDomainError("length too large for a double-precision half-trace")
    return math.cosh(half)


def length_from_halftrace(halftrace: HalfTrace) -> Length:
    return 2.0 * math.acosh(ensure_halftrace(halftrace))


def collar_width(length: Length) -> CollarWidth:
    """Half-width of the standard collar around a simple closed geodesic."""
    value = ensure_length(length)
    return math.asinh(_inv_sinh(value / 2.0))


def crossing_lower_bound(length_beta: Length, n: int) -> Length:
    """Minimal length of any geodesic crossing a geodesic of length ``length_beta`` n times."""
    value = ensure_length(length_beta, name="length_beta")
    if n < 0:
        raise HyperbolicDomainError("crossing count must be nonnegative")
    if n == 0:
        return 0.0
    return 2.0 * n * collar_width(value)


def pentagon_side(a: Length, b: Length) -> Length:
    """Side opposite two adjacent sides a, b of a right-angled pentagon: cosh c = sinh a sinh b."""
    a = ensure_length(a, name="a")
    b = ensure_length(b, name="b")
    log_product = _log_sinh(a) + _log_sinh(b)
    if log_product <= _DEGENERATE_LOG_TOL:
        raise HyperbolicDomainError("degenerate pentagon: sinh(a)*sinh(b) <= 1")
    if a <= _LARGE_ARG and b <= _LARGE_ARG:
        return math.acosh(math.sinh(a) * math.sinh(b))
    return _arccosh_of_exp(log_product)


def pentagon_adjacent_side(opposite: Length, side: Length) -> Length:
    # Inverse of pentagon_side; opposite == 0 is the ideal-vertex limit.
    opposite = ensure_length(opposite, name="opposite", allow_cusp=True)
    side = ensure_length(side, name="side")
    if opposite <= _LARGE_ARG and side <= _LARGE_ARG:
        return math.asinh(math.cosh(opposite) / math.sinh(side))
    return _arcsinh_of_exp(_log_cosh(opposite) - _log_sinh(side))


def trirect_quad_opposite(a: Length, b: Length) -> Length:
    """Half-side of a trirectangle opposite the acute corner: sinh x = sinh a cosh b."""
    a = ensure_length(a, name="a")
    b = ensure_length(b, name="b", allow_cusp=True)
    if a <= _LARGE_ARG and b <= _LARGE_ARG:
        return math.asinh(math.sinh(a) * math.cosh(b))
    return _arcsinh_of_exp(_log_sinh(a) + _log_cosh(b))


def zero_angle_quad_side(h_half: Length) -> Length:
    """Finite side of a quadrilateral with three right angles and one ideal vertex."""
    value = ensure_length(h_half, name="h_half")
    return math.asinh(_inv_sinh(value))


def collar_divergence_bound(ceiling: Length) -> int:
    """Smallest crossing count n whose collar bound 2n*w(ceiling) already exceeds ``ceiling``."""
    value = ensure_length(ceiling, name="ceiling")
    width = collar_width(value)
    n = int(math.floor(value / (2.0 * width))) + 1
    logger.debug("collar divergence ceiling={} width={} n={}", value, width, n)
    return n


def alpha_prime_upper_bound(k: Length) -> Length:
    # Pentagon + zero-angle quadrilateral estimate for the geodesic disjoint from
    # alpha and its separating companion, when both lengths are at most k.
    value = ensure_length(k, name="k")
    half = value / 2.0
    foot = zero_angle_quad_side(half)
    remainder = half - foot
    if remainder <= 0:
        raise HyperbolicDomainError("ceiling too short for the pentagon estimate")
    product = math.sinh(half) * math.sinh(remainder)
    if product < 1.0:
        raise HyperbolicDomainError(f"ceiling too short for the pentagon estimate: product {product!r} < 1")
    return 2.0 * math.acosh(product)
