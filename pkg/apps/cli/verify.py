from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from loguru import logger

from apps.core.bounds.constants import (
    B_SQUARED_MINIMIZER,
    four_holed_sphere_bound,
    known_L,
    locate_b_squared_minimum,
    s3_triple,
    verify_l3_exclusion,
)
from apps.core.bounds.construction import sandwich_report
from apps.core.hypmath.roots import ln_residual, solve_ln
from apps.core.hypmath.trig import length_from_halftrace
from apps.core.search.models import SearchConfig
from apps.core.search.service import ExtremalSearchService
from apps.core.torus.fricke import complete_triple, markov_move, normalize, s1_triple
from apps.core.torus.models import NoCuspedTorusError, TraceTriple
from apps.core.torus.oracle import matrix_oracle_length
from apps.core.torus.slopes import halftrace_of_slope
from apps.core.torus.spectrum import enumerate_geodesics, length_spectrum, pairs_with_intersection
from apps.core.torus.twist import min_two_crossing_partner, two_crossing_partner_via_polygons

KnownFn = Callable[[int], float]
_SEED = 20240611


class VerifyLevel(str, Enum):
    FAST = "fast"
    FULL = "full"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_cusped_triples(count: int, rng: np.random.Generator) -> list[TraceTriple]:
    """Normalized cusped triples from r, s uniform on [1.1, 2.5] with t the smaller root."""
    triples: list[TraceTriple] = []
    while len(triples) < count:
        r, s = rng.uniform(1.1, 2.5, size=2)
        try:
            t_low, _ = complete_triple(float(r), float(s))
        except NoCuspedTorusError:
            continue
        triples.append(normalize(TraceTriple(float(r), float(s), t_low)))
    return triples


def _check(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def check_ln_solver(known: KnownFn) -> CheckResult:
    roots = [solve_ln(n) for n in range(1, 11)]
    worst = max(abs(ln_residual(root, n)) for n, root in enumerate(roots, start=1))
    increasing = all(a < b for a, b in zip(roots, roots[1:]))
    tight = abs(roots[0] - known(1)) < 1e-12
    return _check(
        "ln_solver",
        worst < 1e-12 and increasing and tight,
        f"max residual {worst:.3g}, increasing={increasing}, l_1 == L_1: {tight}",
    )


def check_sandwich(known: KnownFn) -> CheckResult:
    failures = []
    for n in range(1, 11):
        report = sandwich_report(n)
        ok = report.l_n <= report.upper_u_n < 2.0 * report.l_n
        if n <= 3:
            ok = ok and report.l_n - 1e-12 <= known(n) <= report.upper_u_n
        if not ok:
            failures.append(n)
    return _check("sandwich", not failures, f"failing n: {failures}" if failures else "n = 1..10")


def check_four_holed_sphere(known: KnownFn) -> CheckResult:
    value = four_holed_sphere_bound()
    gap = abs(value - 2.0 * math.acosh(3.0))
    return _check(
        "four_holed_sphere",
        gap < 1e-12 and value > known(2),
        f"4*arcsinh(1) - 2*arccosh(3) = {gap:.3g}",
    )


def check_two_crossing_fixed_point(known: KnownFn) -> CheckResult:
    value = known(2)
    gap = abs(min_two_crossing_partner(value, 0.0) - value)
    return _check("two_crossing_fixed_point", gap < 1e-12, f"gap {gap:.3g}")


def check_polygon_pipeline(rng: np.random.Generator, samples: int = 1000) -> CheckResult:
    alphas = rng.uniform(0.05, 8.0, size=samples)
    epsilons = rng.uniform(0.0, 8.0, size=samples)
    worst = 0.0
    for alpha, eps in zip(alphas, epsilons):
        closed = min_two_crossing_partner(float(alpha), float(eps))
        composed = two_crossing_partner_via_polygons(float(alpha), float(eps))
        worst = max(worst, abs(closed - composed) / max(1.0, closed))
    return _check("polygon_pipeline", worst < 1e-12, f"max relative gap {worst:.3g} over {samples}")


def _min_pair_length(triple: TraceTriple, n: int, cutoff: float) -> Optional[float]:
    pairs = pairs_with_intersection(normalize(triple), n, cutoff)
    return min((pair.max_length for pair in pairs), default=None)


def check_fixtures(known: KnownFn) -> CheckResult:
    s1 = s1_triple()
    found = {
        1: _min_pair_length(s1, 1, known(1) + 1e-6),
        2: _min_pair_length(s1, 2, known(2) + 1e-6),
        3: _min_pair_length(s3_triple(), 3, known(3) + 1e-6),
    }
    gaps = {
        n: abs(value - known(n)) if value is not None else math.inf
        for n, value in found.items()
    }
    return _check(
        "s1_s3_fixtures",
        all(gap < 1e-8 for gap in gaps.values()),
        ", ".join(f"n={n}: gap {gap:.3g}" for n, gap in gaps.items()),
    )


def check_b_squared_minimum() -> CheckResult:
    argmin, _ = locate_b_squared_minimum()
    gap = abs(argmin - B_SQUARED_MINIMIZER)
    critical = 6.0 * B_SQUARED_MINIMIZER**2 - 9.0 * B_SQUARED_MINIMIZER + 2.0
    return _check(
        "b_squared_minimum",
        gap < 1e-8 and abs(critical) < 1e-10,
        f"|r - r*| = {gap:.3g}, critical factor {critical:.3g}",
    )


def check_l3_exclusion() -> CheckResult:
    result = verify_l3_exclusion()
    return _check(
        "l3_exclusion",
        result.holds,
        f"w(alpha') = {result.width_alpha_prime:.6f}, w(alpha) = {result.width_alpha:.6f}, "
        f"collar sum {result.collar_sum:.6f} vs {result.ceiling:.6f}",
    )


def _oracle_slopes(limit: int = 10) -> list[tuple[int, int]]:
    slopes = []
    for p in range(-limit, limit + 1):
        for q in range(0, limit + 1):
            if math.gcd(p, q) != 1 or (q == 0 and p != 1):
                continue
            slopes.append((p, q))
    return slopes


def check_oracle(rng: np.random.Generator, count: int = 100) -> CheckResult:
    worst = 0.0
    slopes = _oracle_slopes()
    for triple in random_cusped_triples(count, rng):
        for slope in slopes:
            recursion = length_from_halftrace(halftrace_of_slope(triple, slope))
            oracle = matrix_oracle_length(triple, slope)
            worst = max(worst, abs(recursion - oracle))
    return _check("matrix_oracle", worst < 1e-9, f"max length gap {worst:.3g}")


def check_remarking(rng: np.random.Generator, count: int = 50) -> CheckResult:
    worst = 0.0
    for triple in random_cusped_triples(count, rng):
        moved = triple
        for position in rng.integers(1, 4, size=5):
            moved = markov_move(moved, int(position))
        before = np.array(length_spectrum(triple, 6.0))
        after = np.array(length_spectrum(normalize(moved), 6.0))
        if before.shape != after.shape:
            return _check("remarking_invariance", False, "spectrum sizes differ")
        if before.size:
            worst = max(worst, float(np.max(np.abs(before - after))))
    return _check("remarking_invariance", worst < 1e-8, f"max spectrum gap {worst:.3g}")


def check_collar_property(rng: np.random.Generator, known: KnownFn, count: int = 200) -> CheckResult:
    floor = known(1)
    shortest = math.inf
    for triple in random_cusped_triples(count, rng):
        geodesics = enumerate_geodesics(triple, 6.0)
        p = np.array([item.slope.p for item in geodesics], dtype=np.int64)
        q = np.array([item.slope.q for item in geodesics], dtype=np.int64)
        lengths = np.array([item.length for item in geodesics])
        crossing = np.triu(np.abs(np.outer(p, q) - np.outer(q, p)) >= 1, k=1)
        if crossing.any():
            shortest = min(shortest, float(np.maximum.outer(lengths, lengths)[crossing].min()))
    return _check("collar_property", shortest > floor, f"shortest crossing pair {shortest:.12f}")


def check_reproduction(known: KnownFn, n: int) -> CheckResult:
    result = ExtremalSearchService().find_extremal(n, SearchConfig(n=n))
    gap = abs(result.value - known(n))
    return _check(f"reproduce_L{n}", gap < 1e-6, f"value {result.value!r}, gap {gap:.3g}")


def run_checks(level: VerifyLevel, *, known: KnownFn = known_L) -> list[CheckResult]:
    rng = np.random.default_rng(_SEED)
    checks: list[tuple[str, Callable[[], CheckResult]]] = [
        ("ln_solver", lambda: check_ln_solver(known)),
        ("sandwich", lambda: check_sandwich(known)),
        ("four_holed_sphere", lambda: check_four_holed_sphere(known)),
        ("two_crossing_fixed_point", lambda: check_two_crossing_fixed_point(known)),
        ("polygon_pipeline", lambda: check_polygon_pipeline(rng)),
        ("s1_s3_fixtures", lambda: check_fixtures(known)),
        ("b_squared_minimum", check_b_squared_minimum),
        ("l3_exclusion", check_l3_exclusion),
    ]
    if level == VerifyLevel.FULL:
        checks += [
            ("matrix_oracle", lambda: check_oracle(rng)),
            ("remarking_invariance", lambda: check_remarking(rng)),
            ("collar_property", lambda: check_collar_property(rng, known)),
            ("reproduce_L2", lambda: check_reproduction(known, 2)),
            ("reproduce_L3", lambda: check_reproduction(known, 3)),
        ]
    results = []
    for name, check in checks:
        try:
            result = check()
        except Exception as exc:
            result = CheckResult(name=name, passed=False, detail=str(exc))
        logger.debug("verify {} passed={} ({})", result.name, result.passed, result.detail)
        results.append(result)
    return results
