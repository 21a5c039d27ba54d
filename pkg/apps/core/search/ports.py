from __future__ import annotations

from typing import Callable, Protocol, Sequence, TypeVar

from apps.core.hypmath.models import Length
from apps.core.search.models import ChartPoint

EventT = TypeVar("EventT")
EventHandler = Callable[[EventT], None]


class EventBus(Protocol):
    def publish(self, event: object) -> None:
        """Publish an event to subscribers."""
        raise NotImplementedError

    def subscribe(self, event_type: type[EventT], handler: EventHandler[EventT]) -> Callable[[], None]:
        """Subscribe a handler to events of a given type."""
        raise NotImplementedError


class ObjectiveMap(Protocol):
    def evaluate(
        self,
        points: Sequence[tuple[float, float]],
        n: int,
        cutoff: Length,
    ) -> list[ChartPoint]:
        """Evaluate the objective at every (r, s) chart point, preserving input order."""
        raise NotImplementedError
