"""Pure computation: types, solvers, certificate, oracle and sweeps."""

from waterfill.core.kkt import RESIDUAL_NAMES, KKTReport, verify_kkt
from waterfill.core.model import (
    Activity,
    Allocation,
    AptitudeProfile,
    TimeBudget,
    WaterLevelSolution,
    result_of,
    total_result,
)
from waterfill.core.oracle import brute_force_oracle
from waterfill.core.solvers import marginal_value, solve_bisection, solve_exact
from waterfill.core.sweep import SweepCurve, activation_breakpoints, budget_sweep

__all__ = [
    "Activity",
    "Allocation",
    "AptitudeProfile",
    "KKTReport",
    "RESIDUAL_NAMES",
    "SweepCurve",
    "TimeBudget",
    "WaterLevelSolution",
    "activation_breakpoints",
    "brute_force_oracle",
    "budget_sweep",
    "marginal_value",
    "result_of",
    "solve_bisection",
    "solve_exact",
    "total_result",
    "verify_kkt",
]
