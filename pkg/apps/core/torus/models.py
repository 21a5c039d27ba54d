from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from apps.core.hypmath.models import HalfTrace, Length


class InvalidSlopeError(ValueError):
    """Raised when an integer pair is not a primitive slope."""


class NoCuspedTorusError(ValueError):
    """Raised when two half-traces admit no third one on the cusp relation."""


class DegenerateSurfaceError(ValueError):
    """Raised when a half-trace triple does not describe a hyperbolic one-holed torus."""


class TripleNotNormalizedError(ValueError):
    """Raised when an operation needs the fundamental-domain marking 1 < r <= s <= t <= rs."""


class OracleError(ArithmeticError):
    """Raised when no SL(2,R) representation with the requested traces can be built."""


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) == (0, 0):
            raise InvalidSlopeError("slope (0, 0) is not a curve")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidSlopeError(f"slope ({self.p}, {self.q}) is not primitive")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise InvalidSlopeError(
                f"slope ({self.p}, {self.q}) is not normalized; use Slope.of"
            )

    @classmethod
    def of(cls, p: int, q: int) -> "Slope":
        """Build the unoriented class of (p, q): q > 0, or (1, 0)."""
        p, q = int(p), int(q)
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p=p, q=q)

    def as_tuple(self) -> tuple[int, int]:
        return self.p, self.q


SlopeLike = Union[Slope, tuple[int, int]]


def coerce_slope(value: SlopeLike) -> Slope:
    if isinstance(value, Slope):
        return value
    try:
        p, q = value
    except (TypeError, ValueError) as exc:
        raise InvalidSlopeError(f"cannot read a slope from {value!r}") from exc
    return Slope.of(p, q)


BASE_SLOPES = (Slope(1, 0), Slope(0, 1), Slope(1, 1))


@dataclass(frozen=True)
class TraceTriple:
    r: HalfTrace
    s: HalfTrace
    t: HalfTrace
    boundary: Length = 0.0

    def as_tuple(self) -> tuple[float, float, float]:
        return self.r, self.s, self.t

    @classmethod
    def from_lengths(
        cls,
        first: Length,
        second: Length,
        third: Length,
        *,
        boundary: Length = 0.0,
    ) -> "TraceTriple":
        return cls(
            r=math.cosh(first / 2.0),
            s=math.cosh(second / 2.0),
            t=math.cosh(third / 2.0),
            boundary=boundary,
        )

    @property
    def lengths(self) -> tuple[Length, Length, Length]:
        return tuple(2.0 * math.acosh(max(1.0, value)) for value in self.as_tuple())

    @property
    def systole(self) -> Length:
        # Only the systole when the triple is normalized.
        return min(self.lengths)


@dataclass(frozen=True)
class GeodesicInfo:
    slope: Slope
    halftrace: HalfTrace
    length: Length


@dataclass(frozen=True)
class CrossingPair:
    first: GeodesicInfo
    second: GeodesicInfo
    crossings: int

    @property
    def max_length(self) -> Length:
        return max(self.first.length, self.second.length)
