from __future__ import annotations

import numpy as np
import pytest

from apps.core.search.simplex import nelder_mead


def _bowl(x: np.ndarray) -> tuple[float, str]:
    value = float((x[0] - 1.0) ** 2 + 3.0 * (x[1] + 2.0) ** 2)
    return value, f"{x[0]:.3f},{x[1]:.3f}"


def test_nelder_mead_converges_on_quadratic_bowl() -> None:
    result = nelder_mead(_bowl, np.array([0.0, 0.0]), step=0.5, tol=1e-9, max_iter=2000)
    assert result.converged
    assert result.x == pytest.approx([1.0, -2.0], abs=1e-6)
    assert result.value == pytest.approx(0.0, abs=1e-10)
    assert result.payload == "1.000,-2.000"
    assert result.evaluations > result.iterations


def test_nelder_mead_flags_iteration_cap() -> None:
    result = nelder_mead(_bowl, np.array([5.0, 5.0]), step=0.1, tol=1e-12, max_iter=3)
    assert not result.converged
    assert result.iterations == 3


def test_nelder_mead_handles_infinite_values() -> None:
    def walled(x: np.ndarray) -> tuple[float, None]:
        if x[0] < 0.0:
            return float("inf"), None
        return float((x[0] - 0.5) ** 2 + x[1] ** 2), None

    result = nelder_mead(walled, np.array([0.1, 0.4]), step=0.2, tol=1e-9, max_iter=2000)
    assert result.x == pytest.approx([0.5, 0.0], abs=1e-6)
