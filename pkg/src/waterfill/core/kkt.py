"""Optimality certificate for candidate allocations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from waterfill.core.model import Allocation, AptitudeProfile, TimeBudget, as_budget
from waterfill.errors import DomainError

__all__ = ["KKTReport", "RESIDUAL_NAMES", "verify_kkt"]

RESIDUAL_NAMES = ("primal_feasibility", "nonnegativity", "stationarity", "dual_feasibility")


@dataclass(frozen=True)
class KKTReport:
    passed: bool
    residuals: dict[str, float]
    multiplier: float
    tolerance: float

    @property
    def failed(self) -> tuple[str, ...]:
        """Names of the residuals that exceed the tolerance."""
        return tuple(k for k in RESIDUAL_NAMES if self.residuals[k] > self.tolerance)

    def format(self) -> str:
        lines = [f"{name:<20} {self.residuals[name]:.6e}" for name in RESIDUAL_NAMES]
        lines.append(f"{'multiplier':<20} {self.multiplier:.12g}")
        lines.append(f"{'tolerance':<20} {self.tolerance:.6e}")
        if self.passed:
            lines.append("result: PASS")
        else:
            lines.append("result: FAIL (" + ", ".join(self.failed) + ")")
        return "\n".join(lines) + "\n"


def verify_kkt(
    profile: AptitudeProfile,
    budget: TimeBudget | float,
    candidate: Allocation | Sequence[float] | np.ndarray,
    tolerance: float = 1e-9,
) -> KKTReport:
    """Check the KKT conditions of the log-result problem at ``candidate``.

    Activities with time above ``tolerance`` count as active. The multiplier
    estimate is the largest marginal rate ``a_i / (1 + a_i t_i)`` over the
    active set, or ``max a_i`` when nothing is active. Four residuals are
    reported:

    * primal_feasibility: ``|sum t - T|``
    * nonnegativity: ``max(0, -min t)``
    * stationarity: spread of active marginal rates around the multiplier
    * dual_feasibility: how far an idle activity's aptitude exceeds it

    Negative entries are judged by the nonnegativity residual only; they are
    clipped to zero for the other three.
    """
    if isinstance(candidate, Allocation):
        candidate = candidate.times
    t = np.asarray(candidate, dtype=float)
    if t.ndim != 1 or t.shape[0] != len(profile):
        raise DomainError(f"expected {len(profile)} times, got shape {t.shape}")
    if not np.all(np.isfinite(t)):
        raise DomainError("candidate times must be finite")
    if not (tolerance > 0 and np.isfinite(tolerance)):
        raise DomainError(f"tolerance must be a positive real, got {tolerance!r}")
    total = as_budget(budget).total

    apt = profile.aptitudes
    clipped = np.maximum(t, 0.0)
    rates = apt / (1.0 + apt * clipped)
    active = clipped > tolerance
    multiplier = float(rates[active].max() if active.any() else apt.max())

    residuals = {
        "primal_feasibility": abs(math.fsum(t) - total),
        "nonnegativity": max(0.0, -float(t.min())),
        "stationarity": float(np.abs(rates[active] - multiplier).max()) if active.any() else 0.0,
        "dual_feasibility": (
            max(0.0, float((apt[~active] - multiplier).max())) if (~active).any() else 0.0
        ),
    }
    passed = all(v <= tolerance for v in residuals.values())
    return KKTReport(passed, residuals, multiplier, float(tolerance))
