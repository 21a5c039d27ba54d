from __future__ import annotations

import sys
from datetime import datetime
from typing import Callable, Optional, TextIO

from apps.core.search.events import (
    ExtremalSearchFailed,
    ExtremalSearchFinished,
    ExtremalSearchStarted,
    GridScanFinished,
    RefineFinished,
)


def format_event(event: object) -> Optional[str]:
    if isinstance(event, ExtremalSearchStarted):
        config = event.config
        return (
            f"search n={config.n}: grid [{config.grid_lo}, {config.grid_hi}] "
            f"x{config.grid_steps}, cutoff factor {config.cutoff_factor}"
        )
    if isinstance(event, GridScanFinished):
        return (
            f"grid n={event.n}: {event.feasible}/{event.evaluated} feasible, "
            f"best {event.best.value:.10f} at r={event.best.r:.6f} s={event.best.s:.6f}"
        )
    if isinstance(event, RefineFinished):
        state = "converged" if event.converged else "unconverged"
        return (
            f"refine n={event.n}: {event.start_value:.10f} -> {event.value:.10f} "
            f"({event.iterations} iterations, {event.restarts} restarts, {state})"
        )
    if isinstance(event, ExtremalSearchFinished):
        result = event.result
        label = "torus-restricted" if result.torus_restricted else f"L_{result.n}"
        return f"done n={result.n}: {label} = {result.value:.15g} ({result.evaluations} evaluations)"
    if isinstance(event, ExtremalSearchFailed):
        stage = f" during {event.stage}" if event.stage else ""
        return f"failed n={event.n}{stage}: {event.error}"
    return None


def _format_time(timestamp: datetime) -> str:
    return timestamp.astimezone().strftime("%H:%M:%S")


def make_event_printer(stream: Optional[TextIO] = None) -> Callable[[object], None]:
    def _print(event: object) -> None:
        message = format_event(event)
        if message is None:
            return
        timestamp = getattr(event, "timestamp", None)
        prefix = f"[{_format_time(timestamp)}] " if isinstance(timestamp, datetime) else ""
        print(f"{prefix}{message}", file=stream or sys.stderr)

    return _print
