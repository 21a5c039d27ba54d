from __future__ import annotations

import json
import os
from typing import Optional

from apps.adapters.codec.json_codec import to_jsonable


class JsonlEventLogger:
    """Appends one {"event_type", "event"} JSON line per published event."""

    def __init__(self, path: str) -> None:
        self._path = path

    @classmethod
    def from_env(cls) -> Optional["JsonlEventLogger"]:
        path = os.getenv("GEO_EVENT_LOG_PATH")
        return cls(path) if path else None

    @property
    def path(self) -> str:
        return self._path

    def handle(self, event: object) -> None:
        payload = {
            "event_type": type(event).__name__,
            "event": to_jsonable(event),
        }
        directory = os.path.dirname(self._path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self._path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(payload))
            handle.write("\n")
