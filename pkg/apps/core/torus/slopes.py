from __future__ import annotations

from apps.core.hypmath.models import HalfTrace
from apps.core.torus.fricke import markov_move
from apps.core.torus.models import Slope, SlopeLike, TraceTriple, coerce_slope

_INFINITY = Slope(1, 0)
_ZERO = Slope(0, 1)
_ONE = Slope(1, 1)


def intersection_number(a: SlopeLike, b: SlopeLike) -> int:
    """Geometric intersection number |p*q' - q*p'| of two simple closed curves on the torus."""
    first = coerce_slope(a)
    second = coerce_slope(b)
    return abs(first.p * second.q - first.q * second.p)


def farey_neighbors(a: SlopeLike, b: SlopeLike) -> bool:
    return intersection_number(a, b) == 1


def flip_slope(u: Slope, v: Slope, opposite: Slope) -> Slope:
    """Third vertex of the Farey triangle on edge (u, v) that is not ``opposite``."""
    candidate = Slope.of(u.p + v.p, u.q + v.q)
    if candidate == opposite:
        return Slope.of(u.p - v.p, u.q - v.q)
    return candidate


def _precedes(target: Slope, mid: tuple[int, int]) -> bool:
    # Fraction comparison target < mid with both denominators positive.
    return target.p * mid[1] - target.q * mid[0] < 0


def halftrace_of_slope(triple: TraceTriple, slope: SlopeLike) -> HalfTrace:
    """
    Half-trace of the simple closed geodesic with the given slope.

    The marking is (1, 0) -> r, (0, 1) -> s, (1, 1) -> t. The Stern-Brocot path
    to the slope is followed from the triangle (inf, 0, 1) for positive slopes
    and from (-inf, 0, -1) for negative ones; each step is a Markov move.
    """
    target = coerce_slope(slope)
    r, s, t = triple.as_tuple()
    if target == _INFINITY:
        return r
    if target == _ZERO:
        return s
    if target == _ONE:
        return t

    if target.p > 0:
        left, right = (0, 1), (1, 0)
        state = TraceTriple(s, r, t)
    else:
        left, right = (-1, 0), (0, 1)
        state = TraceTriple(r, s, 2.0 * r * s - t)
    mid = (left[0] + right[0], left[1] + right[1])

    # state holds the half-traces of (left, right, mid).
    while (mid[0], mid[1]) != target.as_tuple():
        if _precedes(target, mid):
            moved = markov_move(state, 2)
            state = TraceTriple(moved.r, moved.t, moved.s)
            right = mid
        else:
            moved = markov_move(state, 1)
            state = TraceTriple(moved.t, moved.s, moved.r)
            left = mid
        mid = (left[0] + right[0], left[1] + right[1])
    return state.t
