from __future__ import annotations

import math
from collections import deque
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from apps.core.hypmath.models import Length
from apps.core.hypmath.trig import length_from_halftrace
from apps.core.torus.fricke import is_normalized
from apps.core.torus.models import (
    BASE_SLOPES,
    CrossingPair,
    GeodesicInfo,
    Slope,
    TraceTriple,
    TripleNotNormalizedError,
)
from apps.core.torus.slopes import flip_slope

# Half-traces within this relative slack of the cutoff are kept.
_CUTOFF_REL_TOL = 1e-12


def _halftrace_ceiling(length_cutoff: Length) -> float:
    if length_cutoff < 0 or not math.isfinite(length_cutoff):
        raise ValueError("length_cutoff must be a finite nonnegative length")
    if length_cutoff / 2.0 > 700.0:
        raise ValueError("length_cutoff too large to enumerate")
    return math.cosh(length_cutoff / 2.0) * (1.0 + _CUTOFF_REL_TOL)


def enumerate_geodesics(triple: TraceTriple, length_cutoff: Length) -> list[GeodesicInfo]:
    """
    Every simple closed geodesic of length <= length_cutoff, ascending.

    Breadth-first over the Farey tree rooted at the normalized triangle
    (1,0), (0,1), (1,1). From that root every flip produces a half-trace at
    least as large as the triangle it leaves, so a branch is pruned as soon
    as its new vertex exceeds the cutoff. Ties are ordered by slope.
    """
    if not is_normalized(triple):
        raise TripleNotNormalizedError(
            f"enumeration needs a normalized triple, got {triple.as_tuple()!r}"
        )
    ceiling = _halftrace_ceiling(length_cutoff)
    found: list[tuple[Slope, float]] = []
    a, b, c = BASE_SLOPES
    x_a, x_b, x_c = triple.as_tuple()
    for slope, value in ((a, x_a), (b, x_b), (c, x_c)):
        if value <= ceiling:
            found.append((slope, value))

    queue: deque[tuple[Slope, float, Slope, float, Slope, float]] = deque(
        [
            (a, x_a, b, x_b, c, x_c),
            (a, x_a, c, x_c, b, x_b),
            (b, x_b, c, x_c, a, x_a),
        ]
    )
    while queue:
        u, x_u, v, x_v, opposite, x_opposite = queue.popleft()
        x_w = 2.0 * x_u * x_v - x_opposite
        if x_w > ceiling:
            continue
        w = flip_slope(u, v, opposite)
        found.append((w, x_w))
        queue.append((u, x_u, w, x_w, v, x_v))
        queue.append((v, x_v, w, x_w, u, x_u))

    geodesics = [
        GeodesicInfo(slope=slope, halftrace=value, length=length_from_halftrace(value))
        for slope, value in found
    ]
    geodesics.sort(key=lambda item: (item.length, item.slope.p, item.slope.q))
    logger.debug("enumerated {} geodesics under cutoff {}", len(geodesics), length_cutoff)
    return geodesics


def length_spectrum(triple: TraceTriple, length_cutoff: Length) -> list[Length]:
    return [item.length for item in enumerate_geodesics(triple, length_cutoff)]


def _slope_arrays(geodesics: Sequence[GeodesicInfo]) -> tuple[np.ndarray, np.ndarray]:
    p = np.fromiter((item.slope.p for item in geodesics), dtype=np.int64, count=len(geodesics))
    q = np.fromiter((item.slope.q for item in geodesics), dtype=np.int64, count=len(geodesics))
    return p, q


def _check_crossings(n: int) -> None:
    if n < 1:
        raise ValueError("crossing count n must be >= 1")


def crossing_pairs(geodesics: Sequence[GeodesicInfo], n: int) -> list[CrossingPair]:
    _check_crossings(n)
    if len(geodesics) < 2:
        return []
    p, q = _slope_arrays(geodesics)
    crossings = np.abs(np.outer(p, q) - np.outer(q, p))
    hits = np.argwhere(np.triu(crossings == n, k=1))
    pairs = [
        CrossingPair(first=geodesics[int(i)], second=geodesics[int(j)], crossings=n)
        for i, j in sorted(hits.tolist(), key=lambda item: (item[1], item[0]))
    ]
    return pairs


def pairs_with_intersection(
    triple: TraceTriple,
    n: int,
    length_cutoff: Length,
) -> list[CrossingPair]:
    """All unordered pairs under the cutoff crossing exactly n times, by ascending max length."""
    _check_crossings(n)
    return crossing_pairs(enumerate_geodesics(triple, length_cutoff), n)


def shortest_crossing_pair(
    geodesics: Sequence[GeodesicInfo],
    n: int,
) -> Optional[CrossingPair]:
    # Spectrum is ascending, so the first index j with a partner i < j
    # realizes the min-max; the shortest partner is kept.
    _check_crossings(n)
    if len(geodesics) < 2:
        return None
    p, q = _slope_arrays(geodesics)
    for j in range(1, len(geodesics)):
        row = np.abs(p[:j] * q[j] - q[:j] * p[j])
        partners = np.flatnonzero(row == n)
        if partners.size:
            return CrossingPair(
                first=geodesics[int(partners[0])],
                second=geodesics[j],
                crossings=n,
            )
    return None
