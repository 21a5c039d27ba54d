from __future__ import annotations

from typing import Any, Sequence

import pandas as pd

from apps.adapters.codec.json_codec import SIGNIFICANT_DIGITS, geodesic_to_dict
from apps.core.bounds.models import BoundsReport
from apps.core.torus.models import GeodesicInfo

BOUNDS_COLUMNS = ["n", "l_n", "u_n", "L_n", "sandwich_ok"]
_FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"


def _bool_cell(value: Any) -> str:
    return "true" if value else "false"


def bounds_frame(reports: Sequence[BoundsReport]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [
            {
                "n": report.n,
                "l_n": report.l_n,
                "u_n": report.upper_u_n,
                "L_n": report.known_L_n,
                "sandwich_ok": report.sandwich_ok,
            }
            for report in reports
        ],
        columns=BOUNDS_COLUMNS,
    )
    frame["L_n"] = frame["L_n"].astype(float)
    frame["sandwich_ok"] = frame["sandwich_ok"].map(_bool_cell)
    return frame


def spectrum_frame(geodesics: Sequence[GeodesicInfo]) -> pd.DataFrame:
    return pd.DataFrame(
        [geodesic_to_dict(info) for info in geodesics],
        columns=["slope_p", "slope_q", "halftrace", "length"],
    )


def records_frame(records: Sequence[dict[str, Any]]) -> pd.DataFrame:
    """Flatten nested JSON records into dotted columns."""
    frame = pd.json_normalize(list(records))
    for column in frame.columns:
        if frame[column].dtype == bool:
            frame[column] = frame[column].map(_bool_cell)
    return frame


def frame_to_csv(frame: pd.DataFrame) -> str:
    # Missing values (L_n for n >= 4) render as empty cells.
    return frame.to_csv(index=False, float_format=_FLOAT_FORMAT, na_rep="", lineterminator="\n")
