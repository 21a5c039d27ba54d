from __future__ import annotations

import math

from loguru import logger

from apps.core.hypmath.models import HalfTrace
from apps.core.torus.models import (
    DegenerateSurfaceError,
    NoCuspedTorusError,
    TraceTriple,
)

CUSP_RESIDUAL_TOL = 1e-9
# Relative slack for the fundamental-domain inequality t <= rs.
_DOMAIN_REL_TOL = 1e-12
_DOUBLE_ROOT_REL_TOL = 1e-12
_NORMALIZE_MAX_MOVES = 10_000


def cusp_relation_residual(r: HalfTrace, s: HalfTrace, t: HalfTrace) -> float:
    """2rst - r^2 - s^2 - t^2; zero exactly on once-punctured tori."""
    return 2.0 * r * s * t - r * r - s * s - t * t


def is_cusped(triple: TraceTriple, *, tol: float = CUSP_RESIDUAL_TOL) -> bool:
    return abs(cusp_relation_residual(*triple.as_tuple())) < tol


def _discriminant(r: HalfTrace, s: HalfTrace) -> float:
    rs2 = (r * s) ** 2
    disc = rs2 - r * r - s * s
    # Rounding splits the double root on the fold; both signs snap to it.
    if abs(disc) <= _DOUBLE_ROOT_REL_TOL * max(1.0, rs2):
        return 0.0
    return disc


def twist_roots_are_double(r: HalfTrace, s: HalfTrace, *, tol: float = 1e-10) -> bool:
    return abs((r * s) ** 2 - r * r - s * s) <= tol


def complete_triple(r: HalfTrace, s: HalfTrace) -> tuple[HalfTrace, HalfTrace]:
    """
    Both third half-traces t with 2rst = r^2 + s^2 + t^2, ascending.

    The roots are rs -/+ sqrt(r^2 s^2 - r^2 - s^2); the smaller one is taken
    from the product r^2 + s^2 to avoid cancellation.
    """
    if r <= 1.0 or s <= 1.0:
        raise DegenerateSurfaceError("half-traces must exceed 1")
    disc = _discriminant(r, s)
    if disc < 0:
        raise NoCuspedTorusError(
            f"no cusped torus with half-traces ({r!r}, {s!r}): discriminant {disc!r} < 0"
        )
    t_high = r * s + math.sqrt(disc)
    t_low = (r * r + s * s) / t_high
    return t_low, t_high


def markov_move(triple: TraceTriple, position: int) -> TraceTriple:
    """Replace one coordinate x by 2*(product of the other two) - x."""
    r, s, t = triple.as_tuple()
    if position == 1:
        return TraceTriple(2.0 * s * t - r, s, t, triple.boundary)
    if position == 2:
        return TraceTriple(r, 2.0 * r * t - s, t, triple.boundary)
    if position == 3:
        return TraceTriple(r, s, 2.0 * r * s - t, triple.boundary)
    raise ValueError("position must be 1, 2 or 3")


def is_normalized(triple: TraceTriple) -> bool:
    r, s, t = triple.as_tuple()
    return 1.0 < r <= s <= t <= r * s * (1.0 + _DOMAIN_REL_TOL)


def normalize(triple: TraceTriple) -> TraceTriple:
    """Remark a cusped triple into the fundamental domain 1 < r <= s <= t <= rs."""
    values = sorted(triple.as_tuple())
    if values[0] <= 1.0:
        raise DegenerateSurfaceError(f"coordinate {values[0]!r} <= 1 is not a closed geodesic")
    moves = 0
    while values[2] > values[0] * values[1] * (1.0 + _DOMAIN_REL_TOL):
        if moves >= _NORMALIZE_MAX_MOVES:
            raise DegenerateSurfaceError("normalization did not terminate; triple is not cusped")
        moved = markov_move(TraceTriple(*values, triple.boundary), 3)
        values = sorted(moved.as_tuple())
        if values[0] <= 1.0:
            raise DegenerateSurfaceError("markov move left the hyperbolic region; triple is not cusped")
        moves += 1
    if moves:
        logger.debug("normalize applied {} markov moves", moves)
    return TraceTriple(values[0], values[1], values[2], triple.boundary)


def modular_torus() -> TraceTriple:
    return TraceTriple(1.5, 1.5, 1.5)


def s1_triple() -> TraceTriple:
    """Once-punctured torus with two geodesics of length 2*arcsinh(1) crossing once."""
    root_two = math.sqrt(2.0)
    return TraceTriple(root_two, root_two, 2.0)
