from __future__ import annotations

import math

import pytest

from apps.core.hypmath.models import HyperbolicDomainError, RootNotConvergedError
from apps.core.hypmath.roots import (
    bisect_increasing,
    golden_section_minimize,
    ln_residual,
    newton_polish,
    solve_ln,
)
from apps.core.hypmath.trig import crossing_lower_bound


def test_solve_ln_l1_is_two_arcsinh_one() -> None:
    assert solve_ln(1) == pytest.approx(2.0 * math.asinh(1.0), abs=1e-12)


@pytest.mark.parametrize("n", range(1, 11))
def test_solve_ln_residual_below_tolerance(n: int) -> None:
    root = solve_ln(n)
    assert abs(ln_residual(root, n)) < 1e-12
    assert crossing_lower_bound(root, n) == pytest.approx(root, rel=1e-11)


def test_solve_ln_is_strictly_increasing() -> None:
    roots = [solve_ln(n) for n in range(1, 11)]
    assert all(a < b for a, b in zip(roots, roots[1:]))
    assert roots[1] == pytest.approx(2.4366, abs=1e-3)
    assert roots[2] == pytest.approx(2.888, abs=2e-3)


def test_solve_ln_rejects_nonpositive_n() -> None:
    with pytest.raises(HyperbolicDomainError, match="positive integer"):
        solve_ln(0)


def test_bisect_increasing_requires_bracket() -> None:
    with pytest.raises(HyperbolicDomainError, match="not bracketed"):
        bisect_increasing(lambda x: x - 5.0, 0.0, 1.0)


def test_bisect_increasing_reports_bracket_at_iteration_cap() -> None:
    with pytest.raises(RootNotConvergedError) as excinfo:
        bisect_increasing(lambda x: x - 0.3, 0.0, 1.0, max_iter=3)
    lo, hi = excinfo.value.bracket
    assert lo <= 0.3 <= hi


def test_bisect_then_newton_polish_hits_sqrt_two() -> None:
    lo, hi = bisect_increasing(lambda x: x * x - 2.0, 0.0, 2.0, width=1e-6)
    root = newton_polish(lambda x: x * x - 2.0, lambda x: 2.0 * x, 0.5 * (lo + hi))
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-14)


def test_golden_section_minimize_finds_parabola_vertex() -> None:
    x, value = golden_section_minimize(lambda t: (t - 2.0) ** 2 + 1.0, 0.0, 5.0)
    assert x == pytest.approx(2.0, abs=1e-6)
    assert value == pytest.approx(1.0, abs=1e-12)


def test_golden_section_minimize_rejects_empty_interval() -> None:
    with pytest.raises(HyperbolicDomainError, match="empty"):
        golden_section_minimize(lambda t: t, 1.0, 1.0)
