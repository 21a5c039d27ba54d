from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

from apps.core.search.models import ChartPoint, ExtremalResult, SearchConfig


def _now() -> datetime:
    return datetime.now(timezone.utc)


@dataclass(frozen=True)
class ExtremalSearchStarted:
    config: SearchConfig
    timestamp: datetime

    @classmethod
    def now(cls, config: SearchConfig) -> "ExtremalSearchStarted":
        return cls(config=config, timestamp=_now())


@dataclass(frozen=True)
class GridScanFinished:
    n: int
    best: ChartPoint
    evaluated: int
    feasible: int
    timestamp: datetime

    @classmethod
    def now(
        cls,
        n: int,
        best: ChartPoint,
        *,
        evaluated: int,
        feasible: int,
    ) -> "GridScanFinished":
        return cls(n=n, best=best, evaluated=evaluated, feasible=feasible, timestamp=_now())


@dataclass(frozen=True)
class RefineFinished:
    n: int
    start_value: float
    value: float
    iterations: int
    restarts: int
    converged: bool
    timestamp: datetime

    @classmethod
    def now(
        cls,
        n: int,
        *,
        start_value: float,
        value: float,
        iterations: int,
        restarts: int,
        converged: bool,
    ) -> "RefineFinished":
        return cls(
            n=n,
            start_value=start_value,
            value=value,
            iterations=iterations,
            restarts=restarts,
            converged=converged,
            timestamp=_now(),
        )


@dataclass(frozen=True)
class ExtremalSearchFinished:
    result: ExtremalResult
    timestamp: datetime

    @classmethod
    def now(cls, result: ExtremalResult) -> "ExtremalSearchFinished":
        return cls(result=result, timestamp=_now())


@dataclass(frozen=True)
class ExtremalSearchFailed:
    n: int
    error: str
    stage: Optional[str]
    timestamp: datetime

    @classmethod
    def now(cls, n: int, error: str, stage: Optional[str] = None) -> "ExtremalSearchFailed":
        return cls(n=n, error=error, stage=stage, timestamp=_now())
