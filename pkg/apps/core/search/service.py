from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
from loguru import logger

from apps.core.bounds.constants import has_known_L
from apps.core.bounds.construction import construction_upper_bound
from apps.core.hypmath.models import Length
from apps.core.hypmath.roots import solve_ln
from apps.core.search.events import (
    ExtremalSearchFailed,
    ExtremalSearchFinished,
    ExtremalSearchStarted,
    GridScanFinished,
    RefineFinished,
)
from apps.core.search.models import (
    Certificates,
    ChartPoint,
    ExtremalResult,
    SearchConfig,
    SearchConfigError,
    SearchFailureError,
)
from apps.core.search.objective import evaluate_chart_point, fold_projection, penalized_chart_point
from apps.core.search.ports import EventBus, ObjectiveMap
from apps.core.search.simplex import nelder_mead


def grid_points(config: SearchConfig) -> list[tuple[float, float]]:
    """Chart points (r, s) with r <= s; swapping r and s remarks the same surface."""
    axis = np.linspace(config.grid_lo, config.grid_hi, config.grid_steps)
    return [
        (float(r), float(s))
        for i, r in enumerate(axis)
        for s in axis[i:]
    ]


def search_cutoff(config: SearchConfig) -> Length:
    return config.cutoff_factor * solve_ln(config.n)


def best_point(points: Sequence[ChartPoint]) -> Optional[ChartPoint]:
    # Deterministic min with lexicographic tie-break on (value, r, s).
    feasible = [point for point in points if point.feasible]
    if not feasible:
        return None
    return min(feasible, key=ChartPoint.sort_key)


def _as_result(point: ChartPoint, n: int, evaluations: int, *, converged: bool = True) -> ExtremalResult:
    if point.triple is None or point.pair is None:
        raise SearchFailureError(f"chart point ({point.r!r}, {point.s!r}) has no feasible pair")
    return ExtremalResult(
        n=n,
        value=point.pair.max_length,
        triple=point.triple,
        pair=point.pair,
        evaluations=evaluations,
        converged=converged,
        torus_restricted=not has_known_L(n),
    )


class _InlineObjectiveMap:
    def evaluate(
        self,
        points: Sequence[tuple[float, float]],
        n: int,
        cutoff: Length,
    ) -> list[ChartPoint]:
        return [evaluate_chart_point(r, s, n, cutoff) for r, s in points]


class ExtremalSearchService:
    def __init__(
        self,
        objective_map: Optional[ObjectiveMap] = None,
        event_bus: Optional[EventBus] = None,
    ) -> None:
        self._objective_map = objective_map or _InlineObjectiveMap()
        self._event_bus = event_bus

    def _publish(self, event: object) -> None:
        if self._event_bus:
            self._event_bus.publish(event)

    def grid_search(self, config: SearchConfig) -> ExtremalResult:
        cutoff = search_cutoff(config)
        points = grid_points(config)
        evaluated = self._objective_map.evaluate(points, config.n, cutoff)
        best = best_point(evaluated)
        feasible = sum(1 for point in evaluated if point.feasible)
        if best is None:
            raise SearchFailureError(
                f"no feasible pair crossing {config.n} times on the grid "
                f"[{config.grid_lo}, {config.grid_hi}]; increase cutoff_factor or widen the range"
            )
        logger.info(
            "grid n={} evaluated={} feasible={} best={!r} at r={!r} s={!r}",
            config.n,
            len(evaluated),
            feasible,
            best.value,
            best.r,
            best.s,
        )
        self._publish(GridScanFinished.now(config.n, best, evaluated=len(evaluated), feasible=feasible))
        return _as_result(best, config.n, len(evaluated))

    def refine(self, start: ExtremalResult, config: SearchConfig) -> ExtremalResult:
        """
        Nelder-Mead descent in the (r, s) chart from a feasible start.

        The simplex is restarted around the incumbent while it keeps improving
        (at most config.max_restarts times). The result never exceeds the start.
        """
        if start.n != config.n:
            raise SearchConfigError("start and config disagree on n")
        cutoff = search_cutoff(config)
        step = (config.grid_hi - config.grid_lo) / (config.grid_steps - 1)

        def scored(x: np.ndarray) -> tuple[float, ChartPoint]:
            point = penalized_chart_point(float(x[0]), float(x[1]), config.n, cutoff)
            return point.value, point

        incumbent = ChartPoint(
            r=start.triple.r,
            s=start.triple.s,
            value=start.value,
            triple=start.triple,
            pair=start.pair,
        )
        evaluations = start.evaluations
        iterations_left = config.max_refine_iters
        iterations = 0
        converged = False
        restarts = 0
        moved = False
        while iterations_left > 0:
            run = nelder_mead(
                scored,
                np.array([incumbent.r, incumbent.s]),
                step=step,
                tol=config.refine_tol,
                max_iter=iterations_left,
            )
            iterations += run.iterations
            iterations_left -= run.iterations
            evaluations += run.evaluations
            converged = run.converged
            # Vertex coordinates are already projected onto real surfaces; the
            # objective grows like sqrt(distance) off the fold, so its snap is tried too.
            candidates = [evaluate_chart_point(run.payload.r, run.payload.s, config.n, cutoff)]
            if run.payload.r > 1.0 and run.payload.s > 1.0:
                snapped = fold_projection(run.payload.r, run.payload.s)
                candidates.append(evaluate_chart_point(snapped[0], snapped[1], config.n, cutoff))
            evaluations += len(candidates)
            candidate = best_point(candidates) or candidates[0]
            improved = candidate.feasible and candidate.value < incumbent.value - config.refine_tol
            if candidate.feasible and candidate.value < incumbent.value:
                incumbent = candidate
                moved = True
            if not improved or restarts >= config.max_restarts or not run.converged:
                break
            restarts += 1
            logger.debug("refine restart {} value={!r}", restarts, incumbent.value)

        logger.info(
            "refine n={} start={!r} value={!r} iterations={} converged={}",
            config.n,
            start.value,
            incumbent.value,
            iterations,
            converged,
        )
        self._publish(
            RefineFinished.now(
                config.n,
                start_value=start.value,
                value=incumbent.value,
                iterations=iterations,
                restarts=restarts,
                converged=converged,
            )
        )
        if not moved:
            return ExtremalResult(
                n=start.n,
                value=start.value,
                triple=start.triple,
                pair=start.pair,
                evaluations=evaluations,
                certificates=start.certificates,
                converged=converged,
                torus_restricted=start.torus_restricted,
            )
        return _as_result(incumbent, config.n, evaluations, converged=converged)

    def find_extremal(self, n: int, config: Optional[SearchConfig] = None) -> ExtremalResult:
        config = config or SearchConfig(n=n)
        if config.n != n:
            raise SearchConfigError(f"config is for n={config.n}, asked for n={n}")
        self._publish(ExtremalSearchStarted.now(config))
        stage = "grid"
        try:
            start = self.grid_search(config)
            stage = "refine"
            refined = self.refine(start, config)
            stage = "certify"
            l_n = solve_ln(n)
            u_n, _ = construction_upper_bound(n, l_n=l_n)
            certificates = Certificates(l_n=l_n, u_n=u_n)
        except Exception as exc:
            self._publish(ExtremalSearchFailed.now(n, str(exc), stage))
            raise
        if not certificates.contains(refined.value):
            logger.warning(
                "n={} value {!r} outside certificate interval [{!r}, {!r}]",
                n,
                refined.value,
                certificates.l_n,
                certificates.u_n,
            )
        result = ExtremalResult(
            n=n,
            value=refined.value,
            triple=refined.triple,
            pair=refined.pair,
            evaluations=refined.evaluations,
            certificates=certificates,
            converged=refined.converged,
            torus_restricted=not has_known_L(n),
        )
        self._publish(ExtremalSearchFinished.now(result))
        return result


def grid_search(config: SearchConfig) -> ExtremalResult:
    return ExtremalSearchService().grid_search(config)


def refine(start: ExtremalResult, config: SearchConfig) -> ExtremalResult:
    return ExtremalSearchService().refine(start, config)


def find_extremal(n: int, config: Optional[SearchConfig] = None) -> ExtremalResult:
    return ExtremalSearchService().find_extremal(n, config)
