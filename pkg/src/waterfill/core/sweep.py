"""Budget sweeps and activation breakpoints."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from waterfill.core.model import AptitudeProfile, WaterLevelSolution
from waterfill.core.solvers import solve_exact
from waterfill.errors import DomainError

__all__ = ["SweepCurve", "activation_breakpoints", "budget_sweep"]


@dataclass(frozen=True)
class SweepCurve:
    budgets: tuple[float, ...]
    solutions: tuple[WaterLevelSolution, ...]
    # (original activity index, smallest budget at which it becomes active)
    breakpoints: tuple[tuple[int, float], ...]

    @property
    def duals(self) -> np.ndarray:
        return np.array([s.dual for s in self.solutions])

    @property
    def total_results(self) -> np.ndarray:
        return np.array([s.total_result for s in self.solutions])

    @property
    def times(self) -> np.ndarray:
        """Array of shape ``(len(budgets), N)``."""
        return np.array([s.times for s in self.solutions])


def activation_breakpoints(profile: AptitudeProfile) -> tuple[tuple[int, float], ...]:
    """Budget at which each activity first receives time, sorted by that budget.

    In descending-aptitude order the ``k``-th activity (1-based) enters once
    the water level reaches its floor, i.e. at
    ``(k - 1) / a_k - sum_{i<k} 1/a_i``. Equal aptitudes enter together.
    """
    apt = profile.aptitudes
    order = np.argsort(-apt, kind="stable")
    floors = 1.0 / apt[order]
    before = np.concatenate([[0.0], np.cumsum(floors)[:-1]])
    entry = np.arange(len(apt)) * floors - before
    entry = np.maximum(entry, 0.0)
    # entry budgets are non-decreasing in this order up to rounding
    entry = np.maximum.accumulate(entry)
    return tuple((int(i), float(b)) for i, b in zip(order, entry))


def budget_sweep(
    profile: AptitudeProfile, budget_min: float, budget_max: float, steps: int
) -> SweepCurve:
    """Solve at ``steps`` evenly spaced budgets in ``[budget_min, budget_max]``."""
    try:
        budget_min = float(budget_min)
        budget_max = float(budget_max)
    except (TypeError, ValueError):
        raise DomainError("budget range must be real numbers") from None
    if not (np.isfinite(budget_min) and np.isfinite(budget_max)):
        raise DomainError("budget range must be finite")
    if budget_min < 0:
        raise DomainError(f"budget_min must be >= 0, got {budget_min!r}")
    if not budget_max > budget_min:
        raise DomainError(f"budget_max must exceed budget_min, got [{budget_min}, {budget_max}]")
    if isinstance(steps, bool) or int(steps) != steps or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps!r}")

    budgets = np.linspace(budget_min, budget_max, int(steps))
    solutions = tuple(solve_exact(profile, float(b)) for b in budgets)
    return SweepCurve(tuple(budgets.tolist()), solutions, activation_breakpoints(profile))
