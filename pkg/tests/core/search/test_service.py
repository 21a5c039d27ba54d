from __future__ import annotations

import math

import numpy as np
import pytest

from apps.core.bounds.constants import B_SQUARED_MINIMIZER, known_L
from apps.core.hypmath.roots import solve_ln
from apps.core.search.events import (
    ExtremalSearchFailed,
    ExtremalSearchFinished,
    ExtremalSearchStarted,
    GridScanFinished,
    RefineFinished,
)
from apps.core.search.models import (
    ChartPoint,
    SearchConfig,
    SearchConfigError,
    SearchFailureError,
)
from apps.core.search.objective import evaluate_chart_point
from apps.core.search.service import (
    ExtremalSearchService,
    best_point,
    find_extremal,
    grid_points,
    grid_search,
    refine,
)


class _RecordingBus:
    def __init__(self) -> None:
        self.events: list[object] = []

    def publish(self, event: object) -> None:
        self.events.append(event)

    def subscribe(self, event_type, handler):
        return lambda: None


class _CountingMap:
    def __init__(self) -> None:
        self.calls = 0

    def evaluate(self, points, n, cutoff):
        from apps.core.search.objective import evaluate_chart_point

        self.calls += 1
        return [evaluate_chart_point(r, s, n, cutoff) for r, s in points]


def test_search_config_defaults() -> None:
    config = SearchConfig(n=2)
    assert (config.grid_lo, config.grid_hi, config.grid_steps) == (1.05, 3.0, 60)
    assert config.cutoff_factor == 2.2
    assert config.refine_tol == 1e-9
    assert config.max_refine_iters == 4000


@pytest.mark.parametrize(
    "changes, message",
    [
        ({"grid_lo": 1.0}, "grid_lo"),
        ({"grid_hi": 1.01}, "grid_hi"),
        ({"grid_steps": 1}, "grid_steps"),
        ({"cutoff_factor": 1.5}, "cutoff_factor"),
        ({"refine_tol": 0.0}, "refine_tol"),
        ({"n": 0}, "n must"),
    ],
)
def test_search_config_validation(changes: dict, message: str) -> None:
    params = {"n": 2, **changes}
    with pytest.raises(SearchConfigError, match=message):
        SearchConfig(**params)


def test_search_config_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("GEO_GRID_STEPS", "12")
    monkeypatch.setenv("GEO_CUTOFF_FACTOR", "3.0")
    config = SearchConfig.from_env(3)
    assert config.n == 3
    assert config.grid_steps == 12
    assert config.cutoff_factor == 3.0
    assert config.grid_lo == 1.05


def test_search_config_from_env_rejects_garbage(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("GEO_GRID_STEPS", "many")
    with pytest.raises(SearchConfigError, match="environment"):
        SearchConfig.from_env(2)


def test_search_config_overrides_skip_none() -> None:
    config = SearchConfig(n=2).with_overrides(grid_steps=20, grid_lo=None)
    assert config.grid_steps == 20
    assert config.grid_lo == 1.05


def test_grid_points_cover_upper_triangle() -> None:
    points = grid_points(SearchConfig(n=1, grid_steps=5))
    assert len(points) == 15
    assert all(r <= s for r, s in points)
    assert points[0] == (1.05, 1.05)


def test_best_point_breaks_ties_on_coordinates() -> None:
    pair_point = grid_search(SearchConfig(n=1, grid_steps=12))
    chosen = best_point(
        [
            ChartPoint(r=2.0, s=2.0, value=1.0, triple=pair_point.triple, pair=pair_point.pair),
            ChartPoint(r=1.5, s=2.5, value=1.0, triple=pair_point.triple, pair=pair_point.pair),
            ChartPoint(r=1.2, s=1.2, value=math.inf),
        ]
    )
    assert chosen is not None
    assert (chosen.r, chosen.s) == (1.5, 2.5)
    assert best_point([ChartPoint(r=1.2, s=1.2, value=math.inf)]) is None


def test_grid_search_n1_is_near_l1() -> None:
    result = grid_search(SearchConfig(n=1))
    assert known_L(1) - 1e-9 <= result.value <= known_L(1) + 0.1
    assert result.pair.crossings == 1
    assert result.value == result.pair.max_length
    assert result.evaluations == 60 * 61 // 2


def test_grid_search_fails_when_cutoff_excludes_every_pair() -> None:
    config = SearchConfig(n=1, grid_lo=3.6, grid_hi=3.61, grid_steps=2)
    with pytest.raises(SearchFailureError, match="cutoff_factor"):
        grid_search(config)


def test_refine_never_worsens_the_start() -> None:
    config = SearchConfig(n=1, grid_steps=12, max_refine_iters=200)
    start = grid_search(config)
    refined = refine(start, config)
    assert refined.value <= start.value
    assert refined.value >= known_L(1) - 1e-9


def test_refine_rejects_mismatched_config() -> None:
    start = grid_search(SearchConfig(n=1, grid_steps=12))
    with pytest.raises(SearchConfigError, match="disagree"):
        refine(start, SearchConfig(n=2, grid_steps=12))


def test_refine_flags_iteration_cap() -> None:
    config = SearchConfig(n=1, grid_steps=12, max_refine_iters=2)
    refined = refine(grid_search(config), config)
    assert not refined.converged


def test_service_publishes_lifecycle_events() -> None:
    bus = _RecordingBus()
    objective_map = _CountingMap()
    service = ExtremalSearchService(objective_map=objective_map, event_bus=bus)
    result = service.find_extremal(1, SearchConfig(n=1, grid_steps=12, max_refine_iters=300))
    kinds = [type(event) for event in bus.events]
    assert kinds == [ExtremalSearchStarted, GridScanFinished, RefineFinished, ExtremalSearchFinished]
    assert objective_map.calls == 1
    assert result.certificates is not None
    assert result.certificates.l_n == pytest.approx(solve_ln(1))
    assert not result.torus_restricted


def test_service_publishes_failure_and_reraises() -> None:
    bus = _RecordingBus()
    service = ExtremalSearchService(event_bus=bus)
    with pytest.raises(SearchFailureError):
        service.find_extremal(1, SearchConfig(n=1, grid_lo=3.6, grid_hi=3.61, grid_steps=2))
    failed = bus.events[-1]
    assert isinstance(failed, ExtremalSearchFailed)
    assert failed.stage == "grid"


def test_find_extremal_rejects_config_for_other_n() -> None:
    with pytest.raises(SearchConfigError, match="n=2"):
        find_extremal(1, SearchConfig(n=2))


@pytest.mark.slow
def test_find_extremal_reproduces_l1() -> None:
    result = find_extremal(1)
    assert result.value == pytest.approx(known_L(1), abs=1e-6)
    assert result.triple.as_tuple() == pytest.approx((math.sqrt(2.0), math.sqrt(2.0), 2.0), abs=1e-2)


@pytest.mark.slow
def test_find_extremal_reproduces_l2() -> None:
    result = find_extremal(2)
    assert result.value == pytest.approx(known_L(2), abs=1e-6)
    assert result.pair.crossings == 2
    assert result.certificates is not None
    assert result.certificates.contains(result.value)


@pytest.mark.slow
def test_find_extremal_reproduces_l3_at_the_symmetric_surface() -> None:
    result = find_extremal(3)
    assert result.value == pytest.approx(known_L(3), abs=1e-6)
    assert abs(result.triple.s - result.triple.t) < 1e-5
    assert abs(result.triple.r - B_SQUARED_MINIMIZER) < 1e-5


@pytest.mark.slow
def test_find_extremal_n4_is_certified_and_labeled() -> None:
    result = find_extremal(4)
    assert result.torus_restricted
    assert result.certificates is not None
    assert result.certificates.l_n - 1e-9 <= result.value <= result.certificates.u_n + 1e-9


def test_grid_search_n2_is_near_l2() -> None:
    result = grid_search(SearchConfig(n=2))
    assert known_L(2) - 1e-9 <= result.value <= known_L(2) + 0.05
    assert result.pair.crossings == 2


@pytest.mark.slow
def test_no_chart_point_beats_l3() -> None:
    cutoff = 2.2 * solve_ln(3)
    axis = np.linspace(1.0, 5.0, 81)[1:]
    values = [
        evaluate_chart_point(float(r), float(s), 3, cutoff).value
        for r in axis
        for s in axis
    ]
    finite = [value for value in values if math.isfinite(value)]
    assert finite
    assert min(finite) >= known_L(3) - 1e-8


@pytest.mark.slow
def test_refine_from_the_optimum_keeps_it() -> None:
    config = SearchConfig(n=2)
    optimum = find_extremal(2, config)
    again = refine(optimum, config)
    assert again.value <= optimum.value
    assert again.value == pytest.approx(optimum.value, abs=1e-12)
