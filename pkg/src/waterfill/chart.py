"""ASCII rendering of the water-filling container.

Each activity is a column whose solid floor rises to its inaptitude
``1/a_i``. A horizontal line marks the water level; water fills active
columns from their floor up to the line, while the floors of abandoned
activities poke through it.
"""

from __future__ import annotations

from waterfill.core import AptitudeProfile, WaterLevelSolution
from waterfill.errors import DomainError

__all__ = ["MIN_WIDTH", "MIN_HEIGHT", "render_chart"]

MIN_WIDTH = 20
MIN_HEIGHT = 10

FLOOR = "#"
WATER = "~"
LINE = "="
EMPTY = " "

_GUTTER = 9  # 8-char label plus the axis bar
_HEADROOM = 1.1


def _cells(value: float, unit: float) -> int:
    # round half up; int() truncates toward zero for non-negative values
    return int(value / unit + 0.5)


def render_chart(
    profile: AptitudeProfile,
    solution: WaterLevelSolution,
    width: int = 72,
    height: int = 20,
) -> str:
    """Draw ``solution`` as ``height`` plot rows, each ``width`` characters
    at most (trailing blanks stripped).

    The vertical scale is linear from 0 to 110% of the larger of the water
    level and the highest floor.
    """
    if width < MIN_WIDTH:
        raise DomainError(f"chart width must be >= {MIN_WIDTH}, got {width}")
    if height < MIN_HEIGHT:
        raise DomainError(f"chart height must be >= {MIN_HEIGHT}, got {height}")
    n = len(profile)
    if len(solution.times) != n:
        raise DomainError("solution does not match the profile")
    plot = width - _GUTTER
    group = plot // n
    if group < 1:
        raise DomainError(f"chart width {width} is too narrow for {n} activities")
    bar = group - 1 if group >= 2 else 1

    floors = [act.inaptitude for act in profile]
    level = solution.water_level
    unit = max(level, max(floors)) * _HEADROOM / height
    floor_rows = [_cells(f, unit) for f in floors]
    line_row = _cells(level, unit)

    lines = [f"water level {level:.6g}, budget {solution.budget:.6g}"]
    for k in range(height - 1, -1, -1):
        chars = []
        for i in range(n):
            for c in range(group):
                if c >= bar:
                    chars.append(LINE if k == line_row else EMPTY)
                elif k < floor_rows[i]:
                    chars.append(FLOOR)
                elif solution.active[i] and k < line_row:
                    chars.append(WATER)
                elif k == line_row:
                    chars.append(LINE)
                else:
                    chars.append(EMPTY)
        chars.extend(LINE if k == line_row else EMPTY for _ in range(plot - n * group))
        label = f"{level:.4g}" if k == line_row else ""
        lines.append(f"{label:>8}|{''.join(chars)}".rstrip())
    lines.append(f"{'0':>8}+" + "-" * plot)
    names = "".join(act.name[:bar].ljust(group) for act in profile)
    lines.append((" " * _GUTTER + names).rstrip())
    return "\n".join(lines) + "\n"
