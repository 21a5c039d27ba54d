from __future__ import annotations

import math

# Scalar domain types. Lengths are hyperbolic lengths (0 encodes a cusp),
# half-traces are cosh(length / 2) and collar widths are half-widths.
Length = float
HalfTrace = float
CollarWidth = float

DEFAULT_TOL = 1e-12


class HyperbolicDomainError(ValueError):
    """Raised when a formula is evaluated outside the region where its polygon exists."""


class RootNotConvergedError(ArithmeticError):
    """Raised when a bracketed solve exhausts its iteration cap."""

    def __init__(self, message: str, *, bracket: tuple[float, float]) -> None:
        super().__init__(f"{message} (bracket=[{bracket[0]!r}, {bracket[1]!r}])")
        self.bracket = bracket


def ensure_length(value: float, *, name: str = "length", allow_cusp: bool = False) -> Length:
    as_float = float(value)
    if not math.isfinite(as_float):
        raise HyperbolicDomainError(f"{name} must be finite")
    if as_float < 0:
        raise HyperbolicDomainError(f"{name} must be nonnegative")
    if as_float == 0 and not allow_cusp:
        raise HyperbolicDomainError(f"{name} must be positive (cusps have no finite value here)")
    return as_float


def ensure_halftrace(value: float, *, name: str = "halftrace") -> HalfTrace:
    as_float = float(value)
    if not math.isfinite(as_float):
        raise HyperbolicDomainError(f"{name} must be finite")
    if as_float < 1.0:
        raise HyperbolicDomainError(f"{name} must be >= 1")
    return as_float
