from __future__ import annotations

import math

import pytest

from apps.core.bounds import construction
from apps.core.bounds.construction import (
    collar_bound_table,
    construction_recursion,
    construction_upper_bound,
    sandwich_report,
)
from apps.core.bounds.constants import known_L
from apps.core.hypmath.roots import solve_ln
from apps.core.torus.fricke import cusp_relation_residual, is_normalized, twist_roots_are_double
from apps.core.torus.oracle import matrix_oracle_length
from apps.core.torus.slopes import halftrace_of_slope


def test_construction_at_n1_is_the_s1_torus() -> None:
    u_1, triple = construction_upper_bound(1)
    assert u_1 == pytest.approx(2.0 * math.acosh(2.0), abs=1e-12)
    assert triple.as_tuple() == pytest.approx((math.sqrt(2.0), math.sqrt(2.0), 2.0), abs=1e-12)
    assert u_1 > known_L(1)


def test_construction_at_n2_beats_twice_l2() -> None:
    u_2, triple = construction_upper_bound(2)
    assert u_2 == pytest.approx(3.779, abs=0.01)
    assert u_2 < 2.0 * solve_ln(2)
    assert matrix_oracle_length(triple, (2, 1)) == pytest.approx(u_2, abs=1e-9)


@pytest.mark.parametrize("n", range(1, 11))
def test_construction_sandwich(n: int) -> None:
    l_n = solve_ln(n)
    u_n, triple = construction_upper_bound(n)
    assert l_n <= u_n < 2.0 * l_n
    assert abs(cusp_relation_residual(*triple.as_tuple())) < 1e-9
    assert twist_roots_are_double(triple.r, triple.s, tol=1e-9)
    assert is_normalized(triple)


@pytest.mark.parametrize("n", range(1, 11))
def test_construction_recursion_walks_slopes_n_over_one(n: int) -> None:
    values, triple = construction_recursion(n)
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[n] == pytest.approx(halftrace_of_slope(triple, (n, 1)), rel=1e-12)


def test_construction_rejects_nonpositive_n() -> None:
    with pytest.raises(ValueError, match="positive"):
        construction_recursion(0)


def test_sandwich_report_n1_is_tight() -> None:
    report = sandwich_report(1)
    assert report.sandwich_ok
    assert report.known_L_n == pytest.approx(report.l_n, abs=1e-12)
    assert report.known_label == "2*arcsinh(1)"


def test_sandwich_report_known_constants_inside_interval() -> None:
    for n in (1, 2, 3):
        report = sandwich_report(n)
        assert report.sandwich_ok
        assert report.l_n - 1e-12 <= report.known_L_n <= report.upper_u_n
        assert report.margin > 0.0


def test_sandwich_report_without_known_constant() -> None:
    report = sandwich_report(10)
    assert report.sandwich_ok
    assert report.known_L_n is None
    assert report.known_label is None


def test_collar_bound_table() -> None:
    table = collar_bound_table(10)
    assert [row.n for row in table] == list(range(1, 11))
    assert all(row.sandwich_ok for row in table)
    assert table[1].twice_l_n == pytest.approx(2.0 * table[1].l_n)
    with pytest.raises(ValueError, match="n_max"):
        collar_bound_table(0)


def test_sandwich_report_solves_for_l_n_once(monkeypatch: pytest.MonkeyPatch) -> None:
    calls: list[int] = []
    real_solve = construction.solve_ln

    def _counting_solve(n: int) -> float:
        calls.append(n)
        return real_solve(n)

    monkeypatch.setattr(construction, "solve_ln", _counting_solve)
    report = construction.sandwich_report(4)
    assert calls == [4]
    assert report.l_n == pytest.approx(real_solve(4), abs=1e-15)


def test_construction_accepts_precomputed_l_n() -> None:
    l_3 = solve_ln(3)
    assert construction_upper_bound(3, l_n=l_3) == construction_upper_bound(3)
