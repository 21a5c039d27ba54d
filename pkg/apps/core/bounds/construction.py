from __future__ import annotations

import math
from typing import Optional

from loguru import logger

from apps.core.bounds.constants import has_known_L, known_constant
from apps.core.bounds.models import BoundsReport
from apps.core.hypmath.models import Length
from apps.core.hypmath.roots import solve_ln
from apps.core.torus.models import TraceTriple

# Rounding slack on the lower end of the sandwich; l_1 equals L_1 exactly.
_SANDWICH_TOL = 1e-12


def construction_recursion(n: int, *, l_n: Optional[Length] = None) -> tuple[list[float], TraceTriple]:
    """
    Half-traces c_0..c_n of the classes delta^k alpha on the zero-twist torus.

    alpha has length l_n and delta length l_n / n. With r = cosh(l_n / 2n) the
    cusp quadratic in the half-trace of delta*alpha has a double root
    c_1 = r * c_0, and c_{k+1} = 2 r c_k - c_{k-1} walks the slopes (k, 1).
    A precomputed l_n may be passed in.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if l_n is None:
        l_n = solve_ln(n)
    r = math.cosh(l_n / (2.0 * n))
    c0 = math.cosh(l_n / 2.0)
    values = [c0, r * c0]
    for _ in range(1, n):
        values.append(2.0 * r * values[-1] - values[-2])
    return values, TraceTriple(r, values[0], values[1])


def construction_upper_bound(n: int, *, l_n: Optional[Length] = None) -> tuple[Length, TraceTriple]:
    values, triple = construction_recursion(n, l_n=l_n)
    u_n = 2.0 * math.acosh(values[n])
    logger.debug("construction n={} u_n={!r} triple={}", n, u_n, triple.as_tuple())
    return u_n, triple


def sandwich_report(n: int) -> BoundsReport:
    l_n = solve_ln(n)
    u_n, _ = construction_upper_bound(n, l_n=l_n)
    known = known_constant(n) if has_known_L(n) else None
    floor = min(u_n, known.value) if known is not None else u_n
    sandwich_ok = l_n <= floor + _SANDWICH_TOL and u_n < 2.0 * l_n
    if known is not None:
        sandwich_ok = sandwich_ok and known.value <= u_n
    return BoundsReport(
        n=n,
        l_n=l_n,
        upper_u_n=u_n,
        known_L_n=known.value if known is not None else None,
        sandwich_ok=sandwich_ok,
        known_label=known.label if known is not None else None,
    )


def collar_bound_table(n_max: int) -> list[BoundsReport]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [sandwich_report(n) for n in range(1, n_max + 1)]
