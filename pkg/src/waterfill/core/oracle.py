"""Exhaustive grid search over the budget simplex.

Used only to check the solvers; it knows nothing about water levels.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from waterfill.core.model import Allocation, AptitudeProfile, TimeBudget, as_budget, results_of
from waterfill.errors import DimensionError, DomainError

__all__ = ["MAX_ORACLE_DIMENSION", "DEFAULT_GRID_POINTS", "brute_force_oracle", "grid_compositions"]

MAX_ORACLE_DIMENSION = 4
DEFAULT_GRID_POINTS = 201


@lru_cache(maxsize=32)
def grid_compositions(steps: int, free: int) -> np.ndarray:
    """All ``free``-tuples of non-negative integers with sum at most ``steps``.

    Rows are in lexicographic order. The result is cached and read-only.
    """
    if free == 0:
        out = np.zeros((1, 0), dtype=np.int32)
    elif free == 1:
        out = np.arange(steps + 1, dtype=np.int32)[:, None]
    else:
        blocks = []
        for k in range(steps + 1):
            rest = grid_compositions(steps - k, free - 1)
            head = np.full((rest.shape[0], 1), k, dtype=np.int32)
            blocks.append(np.hstack([head, rest]))
        out = np.vstack(blocks)
    out.setflags(write=False)
    return out


def brute_force_oracle(
    profile: AptitudeProfile,
    budget: TimeBudget | float,
    grid_points: int = DEFAULT_GRID_POINTS,
) -> Allocation:
    """Best allocation on a uniform grid of step ``T / (grid_points - 1)``.

    The first ``N - 1`` coordinates range over the grid levels and the last
    one takes whatever budget remains, so every candidate spends the budget
    exactly. Limited to ``N <= 4`` activities.
    """
    n = len(profile)
    if n > MAX_ORACLE_DIMENSION:
        raise DimensionError(
            f"oracle supports at most {MAX_ORACLE_DIMENSION} activities, got {n}"
        )
    if int(grid_points) != grid_points or grid_points < 2:
        raise DomainError(f"grid_points must be an integer >= 2, got {grid_points!r}")
    total = as_budget(budget).total
    steps = int(grid_points) - 1
    h = total / steps

    # each coordinate only ever takes grid values, so the objective is a sum
    # of table lookups; the last coordinate's index is the remaining steps
    levels = np.arange(steps + 1) * h
    tables = results_of(profile.aptitudes[:, None], levels[None, :])
    free = grid_compositions(steps, n - 1)
    rest = steps - free.sum(axis=1)
    values = tables[n - 1][rest]
    for i in range(n - 1):
        values = values + tables[i][free[:, i]]
    best = int(np.argmax(values))

    times = free[best] * h
    last = max(total - float(times.sum()), 0.0)
    return Allocation.from_times(profile, np.append(times, last))
