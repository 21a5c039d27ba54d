from __future__ import annotations

import json
import math
from dataclasses import fields, is_dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Optional

import numpy as np

from apps.core.bounds.models import BoundsReport
from apps.core.search.models import Certificates, ChartPoint, ExtremalResult
from apps.core.torus.models import CrossingPair, GeodesicInfo, Slope, TraceTriple

SIGNIFICANT_DIGITS = 15
TORUS_RESTRICTED_LABEL = "torus-restricted upper bound"


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> Optional[float]:
    """Round to the given significant digits; non-finite values become None."""
    as_float = float(value)
    if not math.isfinite(as_float):
        return None
    return float(f"{as_float:.{digits}g}")


def triple_to_dict(triple: TraceTriple) -> dict[str, float]:
    return {
        "r": triple.r,
        "s": triple.s,
        "t": triple.t,
        "boundary_length": triple.boundary,
    }


def triple_from_dict(data: dict[str, Any]) -> TraceTriple:
    return TraceTriple(
        r=float(data["r"]),
        s=float(data["s"]),
        t=float(data["t"]),
        boundary=float(data.get("boundary_length", 0.0)),
    )


def geodesic_to_dict(info: GeodesicInfo) -> dict[str, Any]:
    return {
        "slope_p": info.slope.p,
        "slope_q": info.slope.q,
        "halftrace": info.halftrace,
        "length": info.length,
    }


def geodesic_from_dict(data: dict[str, Any]) -> GeodesicInfo:
    return GeodesicInfo(
        slope=Slope.of(int(data["slope_p"]), int(data["slope_q"])),
        halftrace=float(data["halftrace"]),
        length=float(data["length"]),
    )


def pair_to_dict(pair: CrossingPair) -> dict[str, Any]:
    return {
        "first": geodesic_to_dict(pair.first),
        "second": geodesic_to_dict(pair.second),
        "crossings": pair.crossings,
        "max_length": pair.max_length,
    }


def pair_from_dict(data: dict[str, Any]) -> CrossingPair:
    return CrossingPair(
        first=geodesic_from_dict(data["first"]),
        second=geodesic_from_dict(data["second"]),
        crossings=int(data["crossings"]),
    )


def bounds_report_to_dict(report: BoundsReport) -> dict[str, Any]:
    return {
        "n": report.n,
        "l_n": report.l_n,
        "u_n": report.upper_u_n,
        "L_n": report.known_L_n,
        "L_n_symbolic": report.known_label,
        "two_l_n": report.twice_l_n,
        "sandwich_ok": report.sandwich_ok,
    }


def bounds_report_from_dict(data: dict[str, Any]) -> BoundsReport:
    known = data.get("L_n")
    return BoundsReport(
        n=int(data["n"]),
        l_n=float(data["l_n"]),
        upper_u_n=float(data["u_n"]),
        known_L_n=float(known) if known is not None else None,
        sandwich_ok=bool(data["sandwich_ok"]),
        known_label=data.get("L_n_symbolic"),
    )


def extremal_result_to_dict(result: ExtremalResult) -> dict[str, Any]:
    certificates = result.certificates
    return {
        "n": result.n,
        "value": result.value,
        "label": TORUS_RESTRICTED_LABEL if result.torus_restricted else f"L_{result.n}",
        "triple": triple_to_dict(result.triple),
        "pair": pair_to_dict(result.pair),
        "evaluations": result.evaluations,
        "certificates": (
            {"l_n": certificates.l_n, "u_n": certificates.u_n} if certificates is not None else None
        ),
        "converged": result.converged,
        "torus_restricted": result.torus_restricted,
    }


def extremal_result_from_dict(data: dict[str, Any]) -> ExtremalResult:
    certificates = data.get("certificates")
    return ExtremalResult(
        n=int(data["n"]),
        value=float(data["value"]),
        triple=triple_from_dict(data["triple"]),
        pair=pair_from_dict(data["pair"]),
        evaluations=int(data["evaluations"]),
        certificates=(
            Certificates(l_n=float(certificates["l_n"]), u_n=float(certificates["u_n"]))
            if certificates is not None
            else None
        ),
        converged=bool(data.get("converged", True)),
        torus_restricted=bool(data.get("torus_restricted", False)),
    )


def chart_point_to_dict(point: ChartPoint) -> dict[str, Any]:
    return {
        "r": point.r,
        "s": point.s,
        "value": point.value,
        "triple": triple_to_dict(point.triple) if point.triple is not None else None,
        "pair": pair_to_dict(point.pair) if point.pair is not None else None,
    }


_DOMAIN_ENCODERS = (
    (TraceTriple, triple_to_dict),
    (GeodesicInfo, geodesic_to_dict),
    (CrossingPair, pair_to_dict),
    (BoundsReport, bounds_report_to_dict),
    (ExtremalResult, extremal_result_to_dict),
    (ChartPoint, chart_point_to_dict),
)


def to_jsonable(value: Any) -> Any:
    """Plain JSON structure for domain objects, events and containers of them."""
    for kind, encoder in _DOMAIN_ENCODERS:
        if isinstance(value, kind):
            return to_jsonable(encoder(value))
    if isinstance(value, Slope):
        return {"slope_p": value.p, "slope_q": value.q}
    if is_dataclass(value) and not isinstance(value, type):
        return {field.name: to_jsonable(getattr(value, field.name)) for field in fields(value)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, datetime):
        return value.isoformat(timespec="microseconds")
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    return repr(value)


def rounded(value: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """Apply round_significant to every float of a JSON structure."""
    if isinstance(value, dict):
        return {key: rounded(item, digits) for key, item in value.items()}
    if isinstance(value, list):
        return [rounded(item, digits) for item in value]
    if isinstance(value, float):
        return round_significant(value, digits)
    return value


def dumps(value: Any, *, indent: Optional[int] = 2) -> str:
    return json.dumps(rounded(to_jsonable(value)), indent=indent, allow_nan=False)
