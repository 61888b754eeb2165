"""Domain types and the logarithmic result law."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from waterfill.errors import DomainError

__all__ = [
    "Activity",
    "AptitudeProfile",
    "TimeBudget",
    "Allocation",
    "WaterLevelSolution",
    "result_of",
    "results_of",
    "total_result",
    "as_budget",
]


# Single hook for the log convention; solvers must never reach it.
_log1p = np.log1p


def _check_finite(value: float, what: str) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{what} must be a real number, got {value!r}") from None
    if not math.isfinite(value):
        raise DomainError(f"{what} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Activity:
    """A named activity and the rate at which time turns into result."""

    name: str
    aptitude: float

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise DomainError(f"activity name must be a non-empty string, got {self.name!r}")
        aptitude = _check_finite(self.aptitude, f"aptitude of {self.name!r}")
        if aptitude <= 0:
            raise DomainError(f"aptitude of {self.name!r} must be > 0, got {aptitude!r}")
        object.__setattr__(self, "aptitude", aptitude)

    @property
    def inaptitude(self) -> float:
        """Floor height of this activity's column in the water-filling picture."""
        return 1.0 / self.aptitude


@dataclass(frozen=True)
class AptitudeProfile:
    """Ordered, non-empty collection of activities with distinct names."""

    activities: tuple[Activity, ...]

    def __post_init__(self) -> None:
        activities = tuple(self.activities)
        if not activities:
            raise DomainError("a profile needs at least one activity")
        seen: set[str] = set()
        for act in activities:
            if not isinstance(act, Activity):
                raise DomainError(f"expected Activity, got {type(act).__name__}")
            if act.name in seen:
                raise DomainError(f"duplicate activity name {act.name!r}")
            seen.add(act.name)
        object.__setattr__(self, "activities", activities)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, float]]) -> "AptitudeProfile":
        return cls(tuple(Activity(name, apt) for name, apt in pairs))

    @classmethod
    def from_aptitudes(
        cls, aptitudes: Iterable[float], names: Sequence[str] | None = None
    ) -> "AptitudeProfile":
        """Build a profile from bare aptitudes, naming activities ``a1..aN``
        unless ``names`` is given."""
        aptitudes = list(aptitudes)
        if names is None:
            names = [f"a{i + 1}" for i in range(len(aptitudes))]
        if len(names) != len(aptitudes):
            raise DomainError(f"{len(names)} names for {len(aptitudes)} aptitudes")
        return cls.from_pairs(zip(names, aptitudes))

    def __len__(self) -> int:
        return len(self.activities)

    def __iter__(self) -> Iterator[Activity]:
        return iter(self.activities)

    def __getitem__(self, index: int) -> Activity:
        return self.activities[index]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(act.name for act in self.activities)

    @property
    def aptitudes(self) -> np.ndarray:
        return np.array([act.aptitude for act in self.activities], dtype=float)

    @property
    def inaptitudes(self) -> np.ndarray:
        return 1.0 / self.aptitudes

    def permuted(self, order: Sequence[int]) -> "AptitudeProfile":
        return AptitudeProfile(tuple(self.activities[i] for i in order))


@dataclass(frozen=True)
class TimeBudget:
    """Total amount of divisible resource to hand out."""

    total: float

    def __post_init__(self) -> None:
        total = _check_finite(self.total, "budget")
        if total < 0:
            raise DomainError(f"budget must be >= 0, got {total!r}")
        object.__setattr__(self, "total", total)


def as_budget(budget: TimeBudget | float) -> TimeBudget:
    return budget if isinstance(budget, TimeBudget) else TimeBudget(budget)


def result_of(aptitude: float, time: float) -> float:
    """Result earned by spending ``time`` on an activity: ``log(1 + aptitude*time)``.

    Natural logarithm. Zero time gives exactly zero result.
    """
    aptitude = _check_finite(aptitude, "aptitude")
    time = _check_finite(time, "time")
    if aptitude <= 0:
        raise DomainError(f"aptitude must be > 0, got {aptitude!r}")
    if time < 0:
        raise DomainError(f"time must be >= 0, got {time!r}")
    return float(_log1p(aptitude * time))


def results_of(aptitudes: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Vectorised result law; ``times`` may carry extra leading axes.

    No validation, callers are expected to hold checked arrays.
    """
    return _log1p(aptitudes * times)


def _checked_times(profile: AptitudeProfile, times: Sequence[float] | np.ndarray) -> np.ndarray:
    arr = np.asarray(times, dtype=float)
    if arr.ndim != 1 or arr.shape[0] != len(profile):
        raise DomainError(
            f"expected {len(profile)} times, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise DomainError("times must be finite")
    if np.any(arr < 0):
        i = int(np.flatnonzero(arr < 0)[0])
        raise DomainError(f"time for {profile[i].name!r} is negative: {arr[i]!r}")
    return arr


def total_result(profile: AptitudeProfile, times: Sequence[float] | np.ndarray) -> float:
    """Sum of per-activity results for an allocation aligned with ``profile``."""
    arr = _checked_times(profile, times)
    return math.fsum(results_of(profile.aptitudes, arr))


@dataclass(frozen=True)
class Allocation:
    """Per-activity times together with the results they earn."""

    times: tuple[float, ...]
    results: tuple[float, ...]
    total_result: float

    @classmethod
    def from_times(
        cls, profile: AptitudeProfile, times: Sequence[float] | np.ndarray
    ) -> "Allocation":
        arr = _checked_times(profile, times)
        res = results_of(profile.aptitudes, arr)
        # log1p(0) is exactly 0, so idle activities report zero result
        return cls(tuple(arr.tolist()), tuple(res.tolist()), math.fsum(res))

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class WaterLevelSolution:
    """An optimal allocation with its water level and Lagrange multiplier.

    ``dual`` is the threshold aptitude: activities at or below it get no time.
    ``water_level`` is ``1/dual``, the common value of ``time + 1/aptitude``
    over the active activities.
    """

    budget: float
    allocation: Allocation
    dual: float
    water_level: float
    active: tuple[bool, ...]

    @property
    def times(self) -> tuple[float, ...]:
        return self.allocation.times

    @property
    def total_result(self) -> float:
        return self.allocation.total_result

    @property
    def active_count(self) -> int:
        return sum(self.active)

    @property
    def active_indices(self) -> tuple[int, ...]:
        return tuple(i for i, flag in enumerate(self.active) if flag)
