from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from apps.adapters.codec.csv_codec import frame_to_csv, records_frame
from apps.adapters.codec.json_codec import SIGNIFICANT_DIGITS, dumps, to_jsonable


class OutputStatus(str, Enum):
    OK = "ok"
    INFEASIBLE = "infeasible"
    UNCONVERGED = "unconverged"
    ERROR = "error"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


@dataclass(frozen=True)
class OutputEnvelope:
    command: str
    params: dict[str, Any]
    result: Any
    status: OutputStatus = OutputStatus.OK
    message: Optional[str] = None
    # Row records for csv/table rendering; JSON always carries ``result``.
    rows: Optional[list[dict[str, Any]]] = field(default=None, compare=False)
    csv_text: Optional[str] = field(default=None, compare=False)


def envelope_payload(envelope: OutputEnvelope) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "command": envelope.command,
        "params": envelope.params,
        "result": envelope.result,
        "status": envelope.status.value,
    }
    if envelope.message is not None:
        payload["message"] = envelope.message
    return payload


def render(envelope: OutputEnvelope, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON or envelope.result is None:
        return dumps(envelope_payload(envelope))
    if output_format == OutputFormat.CSV:
        if envelope.csv_text is not None:
            return envelope.csv_text.rstrip("\n")
        return frame_to_csv(records_frame(_rows(envelope))).rstrip("\n")
    return "\n".join(format_table(_rows(envelope)))


def _rows(envelope: OutputEnvelope) -> list[dict[str, Any]]:
    if envelope.rows is not None:
        return [to_jsonable(row) for row in envelope.rows]
    result = to_jsonable(envelope.result)
    if isinstance(result, list):
        return result
    return [result]


def format_table(records: list[dict[str, Any]]) -> list[str]:
    frame = records_frame(records)
    if frame.empty:
        return []
    headers = [str(column) for column in frame.columns]
    rows = [[_format_cell(value) for value in row] for row in frame.itertuples(index=False)]
    return _format_simple_table(headers, rows)


def _format_cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        if value != value:
            return "-"
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def _format_simple_table(headers: list[str], rows: list[list[str]]) -> list[str]:
    if not rows:
        return []
    widths = [len(label) for label in headers]
    for row in rows:
        for idx, value in enumerate(row):
            widths[idx] = max(widths[idx], len(value))
    header = " | ".join(label.ljust(widths[idx]) for idx, label in enumerate(headers))
    divider = "-+-".join("-" * width for width in widths)
    lines = [header, divider]
    for row in rows:
        lines.append(" | ".join(value.ljust(widths[idx]) for idx, value in enumerate(row)))
    return lines
