from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional

from loguru import logger

from apps.adapters.codec.csv_codec import bounds_frame, frame_to_csv, spectrum_frame
from apps.adapters.codec.json_codec import (
    bounds_report_to_dict,
    extremal_result_to_dict,
    geodesic_to_dict,
    triple_to_dict,
)
from apps.cli.output import OutputEnvelope, OutputStatus
from apps.cli.verify import VerifyLevel, run_checks
from apps.core.bounds.constants import has_known_L, known_constant
from apps.core.bounds.construction import collar_bound_table
from apps.core.hypmath.models import HyperbolicDomainError
from apps.core.search.models import SearchConfig, SearchFailureError
from apps.core.search.ports import EventBus, ObjectiveMap
from apps.core.search.service import ExtremalSearchService
from apps.core.torus.fricke import complete_triple, cusp_relation_residual, normalize
from apps.core.torus.models import DegenerateSurfaceError, NoCuspedTorusError, TraceTriple
from apps.core.torus.spectrum import enumerate_geodesics
from apps.core.torus.twist import min_two_crossing_partner, two_crossing_partner_halftrace

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID_SURFACE = 3
EXIT_UNCONVERGED = 4

# Maximum |2rst - r^2 - s^2 - t^2| accepted for a user-supplied triple.
SPECTRUM_RESIDUAL_TOL = 1e-6


@dataclass(frozen=True)
class CommandOutcome:
    envelope: OutputEnvelope
    exit_code: int = EXIT_OK


def _invalid_surface(command: str, params: dict[str, Any], message: str) -> CommandOutcome:
    logger.warning("{}: {}", command, message)
    return CommandOutcome(
        envelope=OutputEnvelope(
            command=command,
            params=params,
            result=None,
            status=OutputStatus.ERROR,
            message=message,
        ),
        exit_code=EXIT_INVALID_SURFACE,
    )


def cmd_bounds(n_max: int) -> CommandOutcome:
    reports = collar_bound_table(n_max)
    return CommandOutcome(
        envelope=OutputEnvelope(
            command="bounds",
            params={"n_max": n_max},
            result=[bounds_report_to_dict(report) for report in reports],
            csv_text=frame_to_csv(bounds_frame(reports)),
        )
    )


def cmd_spectrum(r: float, s: float, t: Optional[float], cutoff: float) -> CommandOutcome:
    params = {"r": r, "s": s, "t": t, "cutoff": cutoff}
    if not math.isfinite(cutoff) or cutoff < 0:
        return _invalid_surface("spectrum", params, "cutoff must be a finite nonnegative length")
    try:
        if t is None:
            t, _ = complete_triple(r, s)
        residual = cusp_relation_residual(r, s, t)
        if abs(residual) > SPECTRUM_RESIDUAL_TOL:
            return _invalid_surface(
                "spectrum",
                params,
                f"triple ({r!r}, {s!r}, {t!r}) is not cusped: residual {residual!r}",
            )
        triple = normalize(TraceTriple(r, s, t))
    except DegenerateSurfaceError as exc:
        return _invalid_surface("spectrum", params, f"degenerate surface: {exc}")
    except NoCuspedTorusError as exc:
        return _invalid_surface("spectrum", params, str(exc))
    geodesics = enumerate_geodesics(triple, cutoff)
    return CommandOutcome(
        envelope=OutputEnvelope(
            command="spectrum",
            params={**params, "t": t, "normalized": triple_to_dict(triple)},
            result=[geodesic_to_dict(info) for info in geodesics],
            csv_text=frame_to_csv(spectrum_frame(geodesics)),
        )
    )


def cmd_extremal(
    config: SearchConfig,
    *,
    objective_map: Optional[ObjectiveMap] = None,
    event_bus: Optional[EventBus] = None,
) -> CommandOutcome:
    params = {
        "n": config.n,
        "grid_lo": config.grid_lo,
        "grid_hi": config.grid_hi,
        "grid_steps": config.grid_steps,
        "cutoff_factor": config.cutoff_factor,
        "tol": config.refine_tol,
        "max_refine_iters": config.max_refine_iters,
    }
    service = ExtremalSearchService(objective_map=objective_map, event_bus=event_bus)
    try:
        result = service.find_extremal(config.n, config)
    except SearchFailureError as exc:
        return CommandOutcome(
            envelope=OutputEnvelope(
                command="extremal",
                params=params,
                result=None,
                status=OutputStatus.INFEASIBLE,
                message=str(exc),
            ),
            exit_code=EXIT_UNCONVERGED,
        )
    payload = extremal_result_to_dict(result)
    if has_known_L(config.n):
        known = known_constant(config.n)
        payload["known_L_n"] = known.value
        payload["known_L_n_symbolic"] = known.label
    status = OutputStatus.OK if result.converged else OutputStatus.UNCONVERGED
    return CommandOutcome(
        envelope=OutputEnvelope(command="extremal", params=params, result=payload, status=status),
        exit_code=EXIT_OK if result.converged else EXIT_UNCONVERGED,
    )


def cmd_pair(alpha: float, eps: float = 0.0) -> CommandOutcome:
    params = {"alpha": alpha, "eps": eps}
    try:
        length = min_two_crossing_partner(alpha, eps)
        halftrace = two_crossing_partner_halftrace(alpha, eps)
    except HyperbolicDomainError as exc:
        return _invalid_surface("pair", params, str(exc))
    return CommandOutcome(
        envelope=OutputEnvelope(
            command="pair",
            params=params,
            result={"alpha": alpha, "eps": eps, "beta": length, "beta_halftrace": halftrace},
        )
    )


def cmd_verify(level: VerifyLevel) -> CommandOutcome:
    checks = run_checks(level)
    failed = [check.name for check in checks if not check.passed]
    return CommandOutcome(
        envelope=OutputEnvelope(
            command="verify",
            params={"level": level.value},
            result=[
                {"check": check.name, "passed": check.passed, "detail": check.detail}
                for check in checks
            ],
            status=OutputStatus.OK if not failed else OutputStatus.ERROR,
            message=f"failed: {', '.join(failed)}" if failed else None,
        ),
        exit_code=EXIT_OK if not failed else EXIT_VERIFY_FAILED,
    )
