from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from typing import Any, Optional

from apps.core.hypmath.models import Length
from apps.core.torus.models import CrossingPair, TraceTriple


class SearchConfigError(ValueError):
    """Raised when a search configuration is outside its valid range."""


class SearchFailureError(RuntimeError):
    """Raised when no feasible surface is found on the grid."""


@dataclass(frozen=True)
class SearchConfig:
    n: int
    grid_lo: float = 1.05
    grid_hi: float = 3.0
    grid_steps: int = 60
    cutoff_factor: float = 2.2
    refine_tol: float = 1e-9
    max_refine_iters: int = 4000
    max_restarts: int = 3

    def __post_init__(self) -> None:
        if self.n < 1:
            raise SearchConfigError("n must be a positive integer")
        if not self.grid_lo > 1.0:
            raise SearchConfigError("grid_lo must exceed 1")
        if not self.grid_hi > self.grid_lo:
            raise SearchConfigError("grid_hi must exceed grid_lo")
        if self.grid_steps < 2:
            raise SearchConfigError("grid_steps must be >= 2")
        if not self.cutoff_factor >= 2.0:
            raise SearchConfigError("cutoff_factor must be >= 2")
        if not self.refine_tol > 0:
            raise SearchConfigError("refine_tol must be positive")
        if self.max_refine_iters < 1:
            raise SearchConfigError("max_refine_iters must be >= 1")
        if self.max_restarts < 0:
            raise SearchConfigError("max_restarts must be >= 0")

    @classmethod
    def from_env(cls, n: int) -> "SearchConfig":
        try:
            return cls(
                n=n,
                grid_lo=float(os.getenv("GEO_GRID_LO", "1.05")),
                grid_hi=float(os.getenv("GEO_GRID_HI", "3.0")),
                grid_steps=int(os.getenv("GEO_GRID_STEPS", "60")),
                cutoff_factor=float(os.getenv("GEO_CUTOFF_FACTOR", "2.2")),
                refine_tol=float(os.getenv("GEO_REFINE_TOL", "1e-9")),
                max_refine_iters=int(os.getenv("GEO_MAX_REFINE_ITERS", "4000")),
            )
        except ValueError as exc:
            if isinstance(exc, SearchConfigError):
                raise
            raise SearchConfigError(f"invalid search setting in environment: {exc}") from exc

    def with_overrides(self, **changes: Any) -> "SearchConfig":
        """Copy with the given non-None fields replaced."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})


@dataclass(frozen=True)
class ChartPoint:
    """Objective value of the surface at chart coordinates (r, s)."""

    r: float
    s: float
    value: Length
    triple: Optional[TraceTriple] = None
    pair: Optional[CrossingPair] = None

    @property
    def feasible(self) -> bool:
        return self.pair is not None and math.isfinite(self.value)

    def sort_key(self) -> tuple[float, float, float]:
        return self.value, self.r, self.s


@dataclass(frozen=True)
class Certificates:
    l_n: Length
    u_n: Length

    def contains(self, value: Length, *, tol: float = 1e-9) -> bool:
        return self.l_n - tol <= value <= self.u_n + tol


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    value: Length
    triple: TraceTriple
    pair: CrossingPair
    evaluations: int
    certificates: Optional[Certificates] = None
    converged: bool = True
    torus_restricted: bool = False
