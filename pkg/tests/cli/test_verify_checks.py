from __future__ import annotations

import numpy as np
import pytest

from apps.cli.verify import (
    VerifyLevel,
    check_b_squared_minimum,
    check_l3_exclusion,
    check_polygon_pipeline,
    random_cusped_triples,
    run_checks,
)
from apps.core.bounds.constants import known_L
from apps.core.torus.fricke import is_cusped, is_normalized


def test_fast_level_passes_with_true_constants() -> None:
    results = run_checks(VerifyLevel.FAST)
    assert [result.name for result in results] == [
        "ln_solver",
        "sandwich",
        "four_holed_sphere",
        "two_crossing_fixed_point",
        "polygon_pipeline",
        "s1_s3_fixtures",
        "b_squared_minimum",
        "l3_exclusion",
    ]
    assert all(result.passed for result in results), [r for r in results if not r.passed]


def test_tampered_constant_is_caught_by_name() -> None:
    results = run_checks(VerifyLevel.FAST, known=lambda n: known_L(n) + 1e-3)
    failed = {result.name for result in results if not result.passed}
    assert "ln_solver" in failed
    assert "s1_s3_fixtures" in failed
    assert "two_crossing_fixed_point" in failed


def test_raising_constant_becomes_a_failed_check() -> None:
    def _broken(n: int) -> float:
        raise KeyError(n)

    results = run_checks(VerifyLevel.FAST, known=_broken)
    by_name = {result.name: result for result in results}
    assert not by_name["sandwich"].passed
    assert by_name["b_squared_minimum"].passed


def test_random_triples_are_normalized_and_cusped() -> None:
    triples = random_cusped_triples(20, np.random.default_rng(5))
    assert len(triples) == 20
    assert all(is_normalized(triple) and is_cusped(triple) for triple in triples)


def test_individual_checks() -> None:
    assert check_b_squared_minimum().passed
    assert check_l3_exclusion().passed
    assert check_polygon_pipeline(np.random.default_rng(11), samples=50).passed


@pytest.mark.slow
def test_full_level_passes() -> None:
    results = run_checks(VerifyLevel.FULL)
    assert all(result.passed for result in results), [r for r in results if not r.passed]
