from __future__ import annotations

import math

import numpy as np

from apps.core.hypmath.models import HalfTrace, HyperbolicDomainError, Length
from apps.core.hypmath.roots import bisect_increasing
from apps.core.torus.fricke import cusp_relation_residual
from apps.core.torus.models import OracleError, Slope, SlopeLike, TraceTriple, coerce_slope

_RANGE_REL_TOL = 1e-12


def _hyperbolic(half_length: float) -> np.ndarray:
    return np.diag([math.exp(half_length), math.exp(-half_length)])


def _rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]])


def holonomy_generators(triple: TraceTriple) -> tuple[np.ndarray, np.ndarray]:
    """
    SL(2,R) matrices A, B with half-traces r, s and tr(AB)/2 = t.

    A is diagonal; B is the diagonal matrix of half-trace s conjugated by a
    rotation about i. The product half-trace
    cos^2(theta) cosh(a+b) + sin^2(theta) cosh(a-b) is monotone in theta and
    the angle is found by bisection.
    """
    r, s, t = triple.as_tuple()
    if min(r, s, t) < 1.0:
        raise OracleError("half-traces must be >= 1")
    a = math.acosh(r)
    b = math.acosh(s)
    upper = math.cosh(a + b)
    lower = math.cosh(a - b)
    if t > upper * (1.0 + _RANGE_REL_TOL) or t < lower * (1.0 - _RANGE_REL_TOL):
        raise OracleError(
            f"product half-trace {t!r} outside [{lower!r}, {upper!r}]; axes cannot cross"
        )
    target = min(max(t, lower), upper)

    def gap(theta: float) -> float:
        return target - (math.cos(theta) ** 2 * upper + math.sin(theta) ** 2 * lower)

    try:
        lo, hi = bisect_increasing(gap, 0.0, math.pi / 2.0, width=1e-16)
    except HyperbolicDomainError as exc:
        raise OracleError(str(exc)) from exc
    theta = 0.5 * (lo + hi)
    rotation = _rotation(theta)
    first = _hyperbolic(a)
    second = rotation @ _hyperbolic(b) @ rotation.T
    return first, second


def word_matrix(first: np.ndarray, second: np.ndarray, slope: SlopeLike) -> np.ndarray:
    # Christoffel-type word for p/q built by Stern-Brocot concatenation.
    target = coerce_slope(slope)
    if target == Slope(1, 0):
        return first
    if target == Slope(0, 1):
        return second
    if target.p < 0:
        first = np.linalg.inv(first)
    p, q = abs(target.p), target.q
    left, right = (0, 1), (1, 0)
    left_word, right_word = second, first
    while True:
        mid = (left[0] + right[0], left[1] + right[1])
        mid_word = left_word @ right_word
        if mid == (p, q):
            return mid_word
        if p * mid[1] - q * mid[0] < 0:
            right, right_word = mid, mid_word
        else:
            left, left_word = mid, mid_word
        if mid[1] > q:
            raise OracleError(f"slope {target.as_tuple()!r} not reached")


def word_matrix_for(triple: TraceTriple, slope: SlopeLike) -> np.ndarray:
    first, second = holonomy_generators(triple)
    return word_matrix(first, second, slope)


def matrix_oracle_halftrace(triple: TraceTriple, slope: SlopeLike) -> HalfTrace:
    return max(1.0, abs(float(np.trace(word_matrix_for(triple, slope)))) / 2.0)


def matrix_oracle_length(triple: TraceTriple, slope: SlopeLike) -> Length:
    """Geodesic length of the slope read off an explicit holonomy representation."""
    if abs(cusp_relation_residual(*triple.as_tuple())) > 1e-6 * max(triple.as_tuple()) ** 3:
        raise OracleError("oracle needs a cusped triple")
    return 2.0 * math.acosh(matrix_oracle_halftrace(triple, slope))
