from __future__ import annotations

import os
from concurrent import futures
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from apps.core.hypmath.models import Length
from apps.core.search.models import ChartPoint
from apps.core.search.objective import evaluate_chart_point


def _evaluate_chunk(
    points: Sequence[tuple[float, float]],
    n: int,
    cutoff: Length,
) -> list[ChartPoint]:
    return [evaluate_chart_point(r, s, n, cutoff) for r, s in points]


def jobs_from_env(default: int = 1) -> int:
    raw = os.getenv("GEO_JOBS")
    if not raw:
        return default
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"GEO_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError("GEO_JOBS must be >= 1")
    return jobs


class SerialObjectiveMap:
    def evaluate(
        self,
        points: Sequence[tuple[float, float]],
        n: int,
        cutoff: Length,
    ) -> list[ChartPoint]:
        return _evaluate_chunk(points, n, cutoff)


class ProcessPoolObjectiveMap:
    """
    Grid evaluation across worker processes.

    Points are split into contiguous chunks and reassembled in submission
    order, so the reduction downstream sees exactly the serial sequence.
    """

    def __init__(self, jobs: int, *, chunks_per_job: int = 8) -> None:
        if jobs < 1:
            raise ValueError("jobs must be >= 1")
        self._jobs = jobs
        self._chunks_per_job = chunks_per_job

    @property
    def jobs(self) -> int:
        return self._jobs

    def evaluate(
        self,
        points: Sequence[tuple[float, float]],
        n: int,
        cutoff: Length,
    ) -> list[ChartPoint]:
        if not points:
            return []
        ndiv = min(len(points), self._jobs * self._chunks_per_job)
        chunks = [
            [points[int(i)] for i in indices]
            for indices in np.array_split(np.arange(len(points)), ndiv)
        ]
        logger.debug("evaluating {} points in {} chunks on {} workers", len(points), ndiv, self._jobs)
        with futures.ProcessPoolExecutor(max_workers=self._jobs) as executor:
            wait_for = [executor.submit(_evaluate_chunk, chunk, n, cutoff) for chunk in chunks]
            results = [future.result() for future in wait_for]
        return [point for chunk in results for point in chunk]


def make_objective_map(jobs: Optional[int] = None) -> SerialObjectiveMap | ProcessPoolObjectiveMap:
    count = jobs if jobs is not None else jobs_from_env()
    if count <= 1:
        return SerialObjectiveMap()
    return ProcessPoolObjectiveMap(count)
