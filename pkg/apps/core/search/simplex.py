from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

import numpy as np

PointT = TypeVar("PointT")
# Maps a vertex to (score, payload); the payload is returned for the best vertex.
ScoredFn = Callable[[np.ndarray], tuple[float, PointT]]


@dataclass(frozen=True)
class SimplexResult(Generic[PointT]):
    x: np.ndarray
    value: float
    payload: PointT
    iterations: int
    evaluations: int
    converged: bool


def nelder_mead(
    func: ScoredFn[PointT],
    x_start: np.ndarray,
    *,
    step: float,
    tol: float,
    max_iter: int,
    alpha: float = 1.0,
    gamma: float = 2.0,
    beta: float = 0.5,
    delta: float = 0.5,
) -> SimplexResult[PointT]:
    """
    Derivative-free Nelder-Mead minimization.

    alpha, gamma, beta and delta are the reflection, expansion, contraction and
    shrink coefficients. Stops when every vertex lies within tol of the best
    one or after max_iter iterations (converged=False).
    """
    x_start = np.asarray(x_start, dtype=float)
    dim = x_start.size
    evaluations = 0

    def scored(x: np.ndarray) -> list:
        nonlocal evaluations
        evaluations += 1
        value, payload = func(x)
        return [x, value, payload]

    res = [scored(x_start)]
    for i in range(dim):
        x = np.copy(x_start)
        x[i] += step
        res.append(scored(x))

    iterations = 0
    converged = False
    while True:
        res.sort(key=lambda item: item[1])
        vertices = np.array([item[0] for item in res])
        diameter = float(np.max(np.linalg.norm(vertices[1:] - vertices[0], axis=1)))
        if diameter < tol:
            converged = True
            break
        if iterations >= max_iter:
            break
        iterations += 1

        centroid = vertices[:-1].mean(axis=0)
        worst = res[-1][0]

        reflected = scored(centroid + alpha * (centroid - worst))
        if res[0][1] <= reflected[1] < res[-2][1]:
            res[-1] = reflected
            continue

        if reflected[1] < res[0][1]:
            expanded = scored(centroid + gamma * (centroid - worst))
            res[-1] = expanded if expanded[1] < reflected[1] else reflected
            continue

        contracted = scored(centroid + beta * (worst - centroid))
        if contracted[1] < res[-1][1]:
            res[-1] = contracted
            continue

        best = res[0][0]
        res = [res[0]] + [scored(best + delta * (item[0] - best)) for item in res[1:]]

    best_x, best_value, best_payload = res[0]
    return SimplexResult(
        x=best_x,
        value=best_value,
        payload=best_payload,
        iterations=iterations,
        evaluations=evaluations,
        converged=converged,
    )
