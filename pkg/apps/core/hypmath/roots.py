from __future__ import annotations

import math
from typing import Callable

from loguru import logger

from apps.core.hypmath.models import (
    DEFAULT_TOL,
    HyperbolicDomainError,
    Length,
    RootNotConvergedError,
)

ScalarFn = Callable[[float], float]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_BISECT_WIDTH = 1e-14
_BISECT_MAX_ITER = 400
_BRACKET_MAX_DOUBLINGS = 64
_NEWTON_POLISH_STEPS = 2


def bisect_increasing(
    func: ScalarFn,
    lo: float,
    hi: float,
    *,
    width: float = _BISECT_WIDTH,
    max_iter: int = _BISECT_MAX_ITER,
) -> tuple[float, float]:
    """
    Shrink a bracket [lo, hi] around the root of an increasing function.

    Requires func(lo) <= 0 <= func(hi). Returns the final bracket; raises
    RootNotConvergedError (carrying the last bracket) when the cap is hit.
    """
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo > 0 or f_hi < 0:
        raise HyperbolicDomainError("root is not bracketed")
    for _ in range(max_iter):
        if hi - lo <= width:
            return lo, hi
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return lo, hi
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid, mid
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
    raise RootNotConvergedError("bisection did not converge", bracket=(lo, hi))


def newton_polish(
    func: ScalarFn,
    dfunc: ScalarFn,
    x: float,
    *,
    steps: int = _NEWTON_POLISH_STEPS,
    bracket: tuple[float, float] | None = None,
) -> float:
    for _ in range(steps):
        slope = dfunc(x)
        if slope == 0.0 or not math.isfinite(slope):
            break
        candidate = x - func(x) / slope
        if bracket is not None and not (bracket[0] <= candidate <= bracket[1]):
            break
        x = candidate
    return x


def golden_section_minimize(
    func: ScalarFn,
    lo: float,
    hi: float,
    *,
    tol: float = 1e-10,
    max_iter: int = 500,
) -> tuple[float, float]:
    """Minimize a unimodal function on [lo, hi]; returns (argmin, value)."""
    if hi <= lo:
        raise HyperbolicDomainError("golden-section interval is empty")
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = func(c)
    fd = func(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = func(d)
    x = 0.5 * (a + b)
    return x, func(x)


def ln_residual(length: float, n: int) -> float:
    # sinh(l / 2n) * sinh(l / 2) - 1, strictly increasing in l > 0.
    return math.sinh(length / (2.0 * n)) * math.sinh(length / 2.0) - 1.0


def _ln_residual_slope(length: float, n: int) -> float:
    inner = length / (2.0 * n)
    outer = length / 2.0
    return (
        math.cosh(inner) * math.sinh(outer) / (2.0 * n)
        + math.sinh(inner) * math.cosh(outer) / 2.0
    )


def solve_ln(n: int, tol: float = DEFAULT_TOL) -> Length:
    """
    Positive root l_n of l = 2n*arcsinh(1/sinh(l/2)), i.e. sinh(l/2n)*sinh(l/2) = 1.

    Bracketed bisection to width 1e-14 followed by two Newton polish steps.
    """
    if n < 1:
        raise HyperbolicDomainError("n must be a positive integer")
    if tol <= 0:
        raise HyperbolicDomainError("tol must be positive")

    def residual(value: float) -> float:
        return ln_residual(value, n)

    hi = 1.0
    for _ in range(_BRACKET_MAX_DOUBLINGS):
        if residual(hi) >= 0:
            break
        hi *= 2.0
    else:
        raise RootNotConvergedError("could not bracket l_n", bracket=(0.0, hi))

    lo, hi = bisect_increasing(residual, 0.0, hi)
    root = newton_polish(
        residual,
        lambda value: _ln_residual_slope(value, n),
        0.5 * (lo + hi),
        bracket=(lo - _BISECT_WIDTH, hi + _BISECT_WIDTH),
    )
    if abs(residual(root)) >= tol:
        raise RootNotConvergedError(f"l_{n} residual above tolerance {tol}", bracket=(lo, hi))
    logger.debug("solve_ln n={} root={!r}", n, root)
    return root
