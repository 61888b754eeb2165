"""Profile files in, solution and sweep reports out.

Profiles come as CSV (header ``name,aptitude``, comma separated, no quoting)
or as a JSON array of ``{"name": ..., "aptitude": ...}`` objects. Reports are
JSON with numbers rounded to 12 significant digits, or an aligned text table.
Row order always follows the input profile.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from waterfill.core import AptitudeProfile, SweepCurve, WaterLevelSolution
from waterfill.errors import DomainError, ProfileError

__all__ = [
    "CSV_HEADER",
    "ProfileDocument",
    "SolutionReport",
    "build_report",
    "emit_profile",
    "emit_report",
    "emit_sweep",
    "load_profile",
    "parse_profile",
    "render_number",
]

CSV_HEADER = "name,aptitude"
SIGNIFICANT_DIGITS = 12

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class ProfileDocument:
    source_path: str
    activities: tuple[tuple[str, float], ...]

    def to_profile(self) -> AptitudeProfile:
        return AptitudeProfile.from_pairs(self.activities)


def _validate_rows(rows: list[tuple[str, float]]) -> None:
    if not rows:
        raise ProfileError("profile has no activities")
    seen: dict[str, int] = {}
    for row, (name, aptitude) in enumerate(rows, start=1):
        if not name:
            raise ProfileError("activity name is empty", row=row, field="name")
        if name in seen:
            raise ProfileError(
                f"duplicate activity name {name!r} (first seen in row {seen[name]})",
                row=row,
                field="name",
            )
        seen[name] = row
        if not math.isfinite(aptitude):
            raise ProfileError(f"aptitude must be finite, got {aptitude!r}", row=row, field="aptitude")
        if aptitude <= 0:
            raise ProfileError(f"aptitude must be > 0, got {aptitude!r}", row=row, field="aptitude")


def _parse_csv(text: str) -> list[tuple[str, float]]:
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        found = lines[0] if lines else ""
        raise ProfileError(f"expected header {CSV_HEADER!r}, found {found!r}")
    rows = []
    for row, line in enumerate(lines[1:], start=1):
        parts = line.split(",")
        if len(parts) != 2:
            raise ProfileError(f"expected 2 comma-separated fields, found {len(parts)}", row=row)
        name, raw = parts
        if not _DECIMAL.fullmatch(raw):
            raise ProfileError(f"not a decimal number: {raw!r}", row=row, field="aptitude")
        rows.append((name, float(raw)))
    return rows


def _parse_json(text: str) -> list[tuple[str, float]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, list):
        raise ProfileError(f"expected a JSON array of activities, got {type(data).__name__}")
    rows = []
    for row, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise ProfileError(f"expected an object, got {type(item).__name__}", row=row)
        for key in ("name", "aptitude"):
            if key not in item:
                raise ProfileError("missing field", row=row, field=key)
        name, aptitude = item["name"], item["aptitude"]
        if not isinstance(name, str):
            raise ProfileError("name must be a string", row=row, field="name")
        if isinstance(aptitude, bool) or not isinstance(aptitude, (int, float)):
            raise ProfileError("aptitude must be a number", row=row, field="aptitude")
        rows.append((name, float(aptitude)))
    return rows


def parse_profile(data: bytes | str, format: str, source_path: str = "<input>") -> ProfileDocument:
    """Parse and validate a profile held in memory.

    ``format`` is ``"csv"`` or ``"json"``. Every error raised is a
    :class:`ProfileError` that names the row and field when it can.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ProfileError(f"input is not valid UTF-8 (byte offset {exc.start})") from None
    else:
        text = data
    if text.startswith("\ufeff"):
        text = text[1:]
    if not text.strip():
        raise ProfileError("input is empty")

    if format == "csv":
        rows = _parse_csv(text)
    elif format == "json":
        rows = _parse_json(text)
    else:
        raise DomainError(f"unknown profile format {format!r}; expected 'csv' or 'json'")
    _validate_rows(rows)
    return ProfileDocument(source_path, tuple(rows))


def load_profile(path: str | Path, format: str | None = None) -> ProfileDocument:
    """Read a profile file; the format defaults to JSON for ``.json`` files
    and CSV otherwise. I/O failures propagate as :class:`OSError`."""
    path = Path(path)
    if format is None:
        format = "json" if path.suffix.lower() == ".json" else "csv"
    return parse_profile(path.read_bytes(), format, source_path=str(path))


def render_number(x: float) -> float:
    """Round to 12 significant digits; ``json`` then prints the short form."""
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}")


def emit_profile(profile: AptitudeProfile, format: str = "csv") -> str:
    if format == "csv":
        for act in profile:
            if "," in act.name or "\n" in act.name or "\r" in act.name:
                raise DomainError(f"name {act.name!r} cannot be written as unquoted CSV")
        lines = [CSV_HEADER] + [
            f"{act.name},{act.aptitude:.{SIGNIFICANT_DIGITS}g}" for act in profile
        ]
        return "\n".join(lines) + "\n"
    if format == "json":
        items = [{"name": a.name, "aptitude": render_number(a.aptitude)} for a in profile]
        return json.dumps(items, indent=2, ensure_ascii=False) + "\n"
    raise DomainError(f"unknown profile format {format!r}")


@dataclass(frozen=True)
class SolutionReport:
    budget: float
    dual: float
    water_level: float
    # (name, aptitude, inaptitude, time, result, active)
    rows: tuple[tuple[str, float, float, float, float, bool], ...]
    total_result: float

    def as_dict(self) -> dict[str, Any]:
        r = render_number
        return {
            "budget": r(self.budget),
            "dual": r(self.dual),
            "water_level": r(self.water_level),
            "total_result": r(self.total_result),
            "activities": [
                {
                    "name": name,
                    "aptitude": r(apt),
                    "inaptitude": r(inapt),
                    "time": r(time),
                    "result": r(res),
                    "active": active,
                }
                for name, apt, inapt, time, res, active in self.rows
            ],
        }


def build_report(solution: WaterLevelSolution, profile: AptitudeProfile) -> SolutionReport:
    if len(solution.times) != len(profile):
        raise DomainError(
            f"solution has {len(solution.times)} times but the profile has {len(profile)} activities"
        )
    alloc = solution.allocation
    rows = tuple(
        (act.name, act.aptitude, act.inaptitude, t, r, flag)
        for act, t, r, flag in zip(profile, alloc.times, alloc.results, solution.active)
    )
    return SolutionReport(solution.budget, solution.dual, solution.water_level, rows, alloc.total_result)


def _table(report: SolutionReport) -> str:
    g = f".{SIGNIFICANT_DIGITS}g"
    header = ("name", "aptitude", "inaptitude", "time", "result", "active")
    body = [
        (name, f"{apt:{g}}", f"{inapt:{g}}", f"{t:{g}}", f"{res:{g}}", "yes" if act else "no")
        for name, apt, inapt, t, res, act in report.rows
    ]
    widths = [max(len(row[c]) for row in [header, *body]) for c in range(len(header))]

    def line(cells: tuple[str, ...]) -> str:
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(cells[1:], widths[1:])]
        return "  ".join([first, *rest]).rstrip()

    out = [
        f"budget        {report.budget:{g}}",
        f"water level   {report.water_level:{g}}",
        f"dual          {report.dual:{g}}",
        f"total result  {report.total_result:{g}}",
        "",
        line(header),
        "  ".join("-" * w for w in widths),
        *(line(row) for row in body),
    ]
    return "\n".join(out) + "\n"


def emit_report(solution: WaterLevelSolution, profile: AptitudeProfile, format: str = "json") -> str:
    """Serialise a solution as ``"json"`` or ``"table"`` text."""
    report = build_report(solution, profile)
    if format == "json":
        return json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + "\n"
    if format == "table":
        return _table(report)
    raise DomainError(f"unknown report format {format!r}; expected 'json' or 'table'")


def emit_sweep(curve: SweepCurve, profile: AptitudeProfile) -> str:
    """Sweep as JSON with parallel arrays and per-activity time series."""
    r = render_number
    times = curve.times
    doc = {
        "budgets": [r(b) for b in curve.budgets],
        "duals": [r(d) for d in curve.duals],
        "total_results": [r(v) for v in curve.total_results],
        "times": {act.name: [r(t) for t in times[:, i]] for i, act in enumerate(profile)},
        "breakpoints": [
            {"name": profile[i].name, "entry_budget": r(b)} for i, b in curve.breakpoints
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
