from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from apps.core.hypmath.models import CollarWidth, Length


class UnknownConstantError(ValueError):
    """Raised when no closed form for L_n is known."""


@dataclass(frozen=True)
class KnownConstant:
    n: int
    label: str
    value: Length


@dataclass(frozen=True)
class BoundsReport:
    n: int
    l_n: Length
    upper_u_n: Length
    known_L_n: Optional[Length]
    sandwich_ok: bool
    known_label: Optional[str] = None

    @property
    def twice_l_n(self) -> Length:
        return 2.0 * self.l_n

    @property
    def margin(self) -> Length:
        # Strictly positive whenever the construction beats the crude 2*l_n estimate.
        return 2.0 * self.l_n - self.upper_u_n


@dataclass(frozen=True)
class L3ExclusionCheck:
    """Collar estimates ruling out a twice-punctured torus below L_3."""

    ceiling: Length
    alpha_prime_bound: Length
    width_alpha: CollarWidth
    width_alpha_prime: CollarWidth
    collar_sum: Length

    @property
    def alpha_prime_width_ok(self) -> bool:
        return self.width_alpha_prime > 0.25

    @property
    def alpha_width_ok(self) -> bool:
        return self.width_alpha > 0.3

    @property
    def collar_sum_ok(self) -> bool:
        return self.collar_sum > self.ceiling

    @property
    def holds(self) -> bool:
        return self.alpha_prime_width_ok and self.alpha_width_ok and self.collar_sum_ok
