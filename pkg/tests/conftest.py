from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from waterfill import AptitudeProfile

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


def random_instance(rng: np.random.Generator, n_max: int, budget_lo=0.01, budget_hi=20.0):
    """Aptitudes log-uniform in [0.1, 10], budget uniform in the given range."""
    n = int(rng.integers(1, n_max + 1))
    aptitudes = np.exp(rng.uniform(np.log(0.1), np.log(10.0), size=n))
    budget = float(rng.uniform(budget_lo, budget_hi))
    return AptitudeProfile.from_aptitudes(aptitudes), budget


aptitude_values = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)
budgets = st.floats(min_value=0.0, max_value=20.0, allow_nan=False, allow_infinity=False)
positive_budgets = st.floats(min_value=1e-3, max_value=20.0, allow_nan=False, allow_infinity=False)


@st.composite
def profiles(draw, max_size: int = 12, min_size: int = 1):
    apts = draw(st.lists(aptitude_values, min_size=min_size, max_size=max_size))
    return AptitudeProfile.from_aptitudes(apts)


@pytest.fixture
def two():
    return AptitudeProfile.from_pairs([("math", 2.0), ("piano", 1.0)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
