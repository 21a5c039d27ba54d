from __future__ import annotations

import math
from typing import Optional

from apps.core.hypmath.models import Length
from apps.core.torus.fricke import complete_triple, normalize
from apps.core.torus.models import (
    CrossingPair,
    DegenerateSurfaceError,
    NoCuspedTorusError,
    TraceTriple,
)
from apps.core.torus.spectrum import enumerate_geodesics, shortest_crossing_pair
from apps.core.search.models import ChartPoint

INFEASIBLE = math.inf
# Objective slope per unit of chart distance beyond the fold.
FOLD_PENALTY_WEIGHT = 10.0


def best_pair(triple: TraceTriple, n: int, cutoff: Length) -> Optional[CrossingPair]:
    """Pair crossing n times with the smallest max length under the cutoff, if any."""
    marked = normalize(triple)
    return shortest_crossing_pair(enumerate_geodesics(marked, cutoff), n)


def objective(triple: TraceTriple, n: int, cutoff: Length) -> Length:
    # min over pairs crossing n times of max(length); INFEASIBLE when none fits.
    pair = best_pair(triple, n, cutoff)
    return pair.max_length if pair is not None else INFEASIBLE


def evaluate_chart_point(r: float, s: float, n: int, cutoff: Length) -> ChartPoint:
    """Objective at chart coordinates (r, s) with t the smaller root of the cusp relation."""
    try:
        t_low, _ = complete_triple(r, s)
    except (NoCuspedTorusError, DegenerateSurfaceError):
        return ChartPoint(r=r, s=s, value=INFEASIBLE)
    triple = normalize(TraceTriple(r, s, t_low))
    pair = shortest_crossing_pair(enumerate_geodesics(triple, cutoff), n)
    if pair is None:
        return ChartPoint(r=r, s=s, value=INFEASIBLE, triple=triple)
    return ChartPoint(r=r, s=s, value=pair.max_length, triple=triple, pair=pair)


def fold_projection(r: float, s: float) -> tuple[float, float]:
    """
    Point of the fold (r^2 - 1)(s^2 - 1) = 1 reached by rescaling u and v.

    With u = r^2 - 1 and v = s^2 - 1 the pair is rescaled to
    (sqrt(u / v), sqrt(v / u)), which keeps the ratio u / v.
    """
    if r <= 1.0 or s <= 1.0:
        raise DegenerateSurfaceError("chart coordinates must exceed 1")
    u = r * r - 1.0
    v = s * s - 1.0
    return math.sqrt(1.0 + math.sqrt(u / v)), math.sqrt(1.0 + math.sqrt(v / u))


def penalized_chart_point(
    r: float,
    s: float,
    n: int,
    cutoff: Length,
    *,
    weight: float = FOLD_PENALTY_WEIGHT,
) -> ChartPoint:
    """
    Objective extended past the fold for the local search.

    Points with no cusped torus are evaluated at their fold projection and
    charged weight * distance; the returned point carries the projected
    coordinates so only real surfaces are ever reported.
    """
    if r <= 1.0 or s <= 1.0:
        return ChartPoint(r=r, s=s, value=INFEASIBLE)
    point = evaluate_chart_point(r, s, n, cutoff)
    if point.triple is not None:
        return point
    fold_r, fold_s = fold_projection(r, s)
    projected = evaluate_chart_point(fold_r, fold_s, n, cutoff)
    if not projected.feasible:
        return projected
    distance = math.hypot(r - fold_r, s - fold_s)
    return ChartPoint(
        r=fold_r,
        s=fold_s,
        value=projected.value + weight * distance,
        triple=projected.triple,
        pair=projected.pair,
    )
