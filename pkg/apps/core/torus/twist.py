from __future__ import annotations

import math

from apps.core.hypmath.models import HalfTrace, Length, ensure_length
from apps.core.hypmath.trig import pentagon_adjacent_side, trirect_quad_opposite


def two_crossing_partner_halftrace(alpha_len: Length, eps_len: Length) -> HalfTrace:
    # cosh(beta/2) = 1 + (cosh(eps/2) + 1) / (2 (cosh(alpha/2) - 1))
    alpha = ensure_length(alpha_len, name="alpha_len")
    eps = ensure_length(eps_len, name="eps_len", allow_cusp=True)
    return 1.0 + (math.cosh(eps / 2.0) + 1.0) / (2.0 * (math.cosh(alpha / 2.0) - 1.0))


def min_two_crossing_partner(alpha_len: Length, eps_len: Length = 0.0) -> Length:
    """
    Sharp minimum length of a simple closed geodesic crossing alpha twice.

    Taken over one-holed tori with boundary length eps_len (0 for a cusp);
    attained when alpha is pasted with a half-twist. Evaluated through
    sinh(beta/4) = cosh(eps/4) / (2 sinh(alpha/4)), which stays accurate when
    beta is small.
    """
    alpha = ensure_length(alpha_len, name="alpha_len")
    eps = ensure_length(eps_len, name="eps_len", allow_cusp=True)
    return 4.0 * math.asinh(math.cosh(eps / 4.0) / (2.0 * math.sinh(alpha / 4.0)))


def two_crossing_partner_via_polygons(alpha_len: Length, eps_len: Length = 0.0) -> Length:
    """Same length assembled from the right-angled pentagon and the trirectangle."""
    alpha = ensure_length(alpha_len, name="alpha_len")
    eps = ensure_length(eps_len, name="eps_len", allow_cusp=True)
    half_a = pentagon_adjacent_side(eps / 4.0, alpha / 2.0)
    return 4.0 * trirect_quad_opposite(half_a, alpha / 4.0)
