"""Water-filling solvers for ``max sum log(1 + a_i t_i)`` s.t. ``sum t_i = T``.

The optimum pours the budget over a floor made of inaptitudes ``1/a_i``.
Every activity whose floor lies below the resulting water level receives the
depth of water above its floor; the rest receive nothing. Neither solver here
evaluates a logarithm: results are attached only when the final
:class:`Allocation` is built.
"""

from __future__ import annotations

import math

import numpy as np

from waterfill.core.model import (
    Allocation,
    AptitudeProfile,
    TimeBudget,
    WaterLevelSolution,
    as_budget,
)
from waterfill.errors import DomainError

__all__ = ["solve_exact", "solve_bisection", "marginal_value", "spent_at"]

_MAX_BISECTIONS = 2000


def _descending(aptitudes: np.ndarray) -> np.ndarray:
    # stable on original index so ties keep input order
    return np.argsort(-aptitudes, kind="stable")


def _solution(
    profile: AptitudeProfile, budget: float, times: np.ndarray, dual: float, level: float
) -> WaterLevelSolution:
    allocation = Allocation.from_times(profile, times)
    active = tuple(bool(t > 0.0) for t in allocation.times)
    return WaterLevelSolution(budget, allocation, dual, level, active)


def _single(profile: AptitudeProfile, budget: float) -> WaterLevelSolution:
    a = profile[0].aptitude
    level = budget + 1.0 / a
    return _solution(profile, budget, np.array([budget]), 1.0 / level, level)


def solve_exact(profile: AptitudeProfile, budget: TimeBudget | float) -> WaterLevelSolution:
    """Closed-form water-filling by scanning active-set sizes.

    With aptitudes sorted in descending order and ``S_m`` the sum of the first
    ``m`` inaptitudes, the water level for ``m`` active activities is
    ``(T + S_m) / m``. The active count is the largest ``m`` whose level sits
    strictly above the ``m``-th floor, so an activity whose floor touches the
    level exactly gets no time.

    A zero budget yields the all-zero allocation at water level
    ``1 / max(a)``.
    """
    total = as_budget(budget).total
    n = len(profile)
    if n == 1:
        return _single(profile, total)

    apt = profile.aptitudes
    order = _descending(apt)
    floors = 1.0 / apt[order]
    levels = (total + np.cumsum(floors)) / np.arange(1, n + 1)
    above = levels > floors
    # the feasible sizes form a prefix; take its length so every chosen floor
    # lies strictly below the level even under rounding
    m = n if above.all() else int(np.argmin(above))
    m = max(m, 1)
    level = float(levels[m - 1])

    depth = level - floors[:m]
    # spread the rounding residue evenly so the level stays common
    depth += (total - math.fsum(depth)) / m
    np.maximum(depth, 0.0, out=depth)

    times = np.zeros(n)
    times[order[:m]] = depth
    return _solution(profile, total, times, 1.0 / level, level)


def spent_at(aptitudes: np.ndarray, dual: float) -> float:
    """Budget consumed when every activity is filled up to level ``1/dual``."""
    return math.fsum(np.maximum(0.0, 1.0 / dual - 1.0 / aptitudes))


def solve_bisection(
    profile: AptitudeProfile, budget: TimeBudget | float, tolerance: float = 1e-12
) -> WaterLevelSolution:
    """Find the multiplier by bisection on the budget it spends.

    ``spent(lam) = sum(max(0, 1/lam - 1/a_i))`` is continuous and
    non-increasing, with ``spent(max a) = 0`` and
    ``spent(1/(T + max 1/a)) >= T``, so that interval always brackets the
    root. Iteration stops once ``|spent - T| <= tolerance * max(1, T)`` or the
    bracket can no longer shrink in floating point. The final times are
    rescaled to spend the budget exactly.

    A zero budget is rejected; use :func:`solve_exact` for it.
    """
    try:
        tolerance = float(tolerance)
    except (TypeError, ValueError):
        raise DomainError(f"tolerance must be a positive real, got {tolerance!r}") from None
    if not (tolerance > 0 and math.isfinite(tolerance)):
        raise DomainError(f"tolerance must be a positive real, got {tolerance!r}")
    total = as_budget(budget).total
    if total == 0:
        raise DomainError("bisection needs a strictly positive budget")
    if len(profile) == 1:
        return _single(profile, total)

    apt = profile.aptitudes
    hi = float(apt.max())
    lo = 1.0 / (total + float((1.0 / apt).max()))
    target = tolerance * max(1.0, total)

    lam = lo
    gap = spent_at(apt, lam) - total
    for _ in range(_MAX_BISECTIONS):
        if abs(gap) <= target:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        lam = mid
        gap = spent_at(apt, lam) - total
        if gap > 0:
            lo = mid
        else:
            hi = mid

    times = np.maximum(0.0, 1.0 / lam - 1.0 / apt)
    spent = math.fsum(times)
    if spent > 0:
        times *= total / spent
    else:
        # lam landed on max(a); only the top group can take the budget
        top = apt == apt.max()
        times[top] = total / np.count_nonzero(top)
    return _solution(profile, total, times, lam, 1.0 / lam)


def marginal_value(solution: WaterLevelSolution) -> float:
    """Gain in total result per extra unit of budget at this optimum.

    This is the Lagrange multiplier itself: ``d r_tot / d T = dual`` wherever
    the active set does not change.
    """
    return solution.dual
