from apps.adapters.codec.csv_codec import (
    BOUNDS_COLUMNS,
    bounds_frame,
    frame_to_csv,
    records_frame,
    spectrum_frame,
)
from apps.adapters.codec.json_codec import (
    SIGNIFICANT_DIGITS,
    TORUS_RESTRICTED_LABEL,
    bounds_report_from_dict,
    bounds_report_to_dict,
    chart_point_to_dict,
    dumps,
    extremal_result_from_dict,
    extremal_result_to_dict,
    geodesic_from_dict,
    geodesic_to_dict,
    pair_from_dict,
    pair_to_dict,
    round_significant,
    rounded,
    to_jsonable,
    triple_from_dict,
    triple_to_dict,
)

__all__ = [
    "BOUNDS_COLUMNS",
    "bounds_frame",
    "frame_to_csv",
    "records_frame",
    "spectrum_frame",
    "SIGNIFICANT_DIGITS",
    "TORUS_RESTRICTED_LABEL",
    "bounds_report_from_dict",
    "bounds_report_to_dict",
    "chart_point_to_dict",
    "dumps",
    "extremal_result_from_dict",
    "extremal_result_to_dict",
    "geodesic_from_dict",
    "geodesic_to_dict",
    "pair_from_dict",
    "pair_to_dict",
    "round_significant",
    "rounded",
    "to_jsonable",
    "triple_from_dict",
    "triple_to_dict",
]
