import numpy as np
import pytest

from waterfill import AptitudeProfile, DomainError, activation_breakpoints, budget_sweep, solve_exact


def test_second_activity_enters_at_half():
    profile = AptitudeProfile.from_aptitudes([2, 1])
    curve = budget_sweep(profile, 0.0, 2.0, 21)
    assert dict(curve.breakpoints) == {0: 0.0, 1: 0.5}
    assert solve_exact(profile, 0.49).times[1] == 0.0
    assert solve_exact(profile, 0.51).times[1] == pytest.approx(0.005, abs=1e-12)


def test_breakpoints_original_indexing_and_order():
    profile = AptitudeProfile.from_aptitudes([1.0, 4.0, 2.0])
    bps = activation_breakpoints(profile)
    assert [i for i, _ in bps] == [1, 2, 0]
    # k-th sorted entry: (k-1)/a_k - sum_{i<k} 1/a_i
    assert bps[1][1] == pytest.approx(1 / 2 - 1 / 4)
    assert bps[2][1] == pytest.approx(2 / 1 - (1 / 4 + 1 / 2))


def test_equal_aptitudes_enter_together():
    bps = activation_breakpoints(AptitudeProfile.from_aptitudes([0.7] * 4))
    assert [b for _, b in bps] == [0.0] * 4


def test_breakpoints_are_where_time_starts():
    profile = AptitudeProfile.from_aptitudes([3.0, 0.5, 1.1, 2.0])
    for idx, entry in activation_breakpoints(profile):
        assert solve_exact(profile, entry).times[idx] == pytest.approx(0.0, abs=1e-12)
        assert solve_exact(profile, entry + 1e-3).times[idx] > 0


def test_sweep_monotone():
    profile = AptitudeProfile.from_aptitudes([3.0, 0.5, 1.1, 2.0])
    curve = budget_sweep(profile, 0.0, 5.0, 60)
    assert np.all(np.diff(curve.budgets) > 0)
    assert np.all(np.diff(curve.duals) <= 0)
    assert np.all(np.diff(curve.total_results) >= 0)
    assert np.all(np.diff(curve.times, axis=0) >= -1e-10)


@pytest.mark.parametrize(
    "lo, hi, steps", [(-1.0, 1.0, 5), (1.0, 1.0, 5), (2.0, 1.0, 5), (0.0, 1.0, 1), (0.0, 1.0, 2.5)]
)
def test_sweep_rejects(lo, hi, steps):
    with pytest.raises(DomainError):
        budget_sweep(AptitudeProfile.from_aptitudes([1.0, 2.0]), lo, hi, steps)
