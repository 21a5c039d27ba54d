"""Numerical minimization of the min-max pair length over cusped once-punctured tori."""
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
from apps.core.search.objective import (
    FOLD_PENALTY_WEIGHT,
    INFEASIBLE,
    best_pair,
    evaluate_chart_point,
    fold_projection,
    objective,
    penalized_chart_point,
)
from apps.core.search.ports import EventBus, ObjectiveMap
from apps.core.search.service import (
    ExtremalSearchService,
    best_point,
    find_extremal,
    grid_points,
    grid_search,
    refine,
    search_cutoff,
)
from apps.core.search.simplex import SimplexResult, nelder_mead

__all__ = [
    "ExtremalSearchFailed",
    "ExtremalSearchFinished",
    "ExtremalSearchStarted",
    "GridScanFinished",
    "RefineFinished",
    "Certificates",
    "ChartPoint",
    "ExtremalResult",
    "SearchConfig",
    "SearchConfigError",
    "SearchFailureError",
    "FOLD_PENALTY_WEIGHT",
    "INFEASIBLE",
    "best_pair",
    "evaluate_chart_point",
    "fold_projection",
    "objective",
    "penalized_chart_point",
    "EventBus",
    "ObjectiveMap",
    "ExtremalSearchService",
    "best_point",
    "find_extremal",
    "grid_points",
    "grid_search",
    "refine",
    "search_cutoff",
    "SimplexResult",
    "nelder_mead",
]
