"""JSON project and schedule files.

Project file::

    {
      "activities": ["A", "B", "C"],
      "start_finish": [{"from": "A", "to": "A", "lag": 4}, ...],
      "start_start":  [{"from": "B", "to": "A", "lag": -2}, ...]
    }

An entry ``{"from": j, "to": i, "lag": v}`` sets ``c_ij`` (or ``d_ij``) to
``v``: activity ``i`` completes (starts) no earlier than ``v`` after activity
``j`` starts.  Pairs that are not listed are ``-inf``; ``-inf`` is never
written.  Repeated pairs keep the largest lag.  ``start_start`` is optional.

Schedule file: see :class:`ScheduleReport`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .linalg import TropMatrix, TropVector
from .scheduler import ProjectSpec, Schedule
from .semifield import MAX_PLUS, SemifieldValue


class ProjectFileError(ValueError):
    """Malformed project or schedule file."""


def _num(v):
    v = float(v)
    return int(v) if v.is_integer() else v


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectFileError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _lag_matrix(entries, index, where):
    n = len(index)
    M = np.full((n, n), -math.inf)
    if not isinstance(entries, list):
        raise ProjectFileError(f"{where}: expected a list of {{from, to, lag}} objects")
    for k, item in enumerate(entries):
        ctx = f"{where}[{k}]"
        if not isinstance(item, dict):
            raise ProjectFileError(f"{ctx}: expected an object")
        missing = [key for key in ("from", "to", "lag") if key not in item]
        if missing:
            raise ProjectFileError(f"{ctx}: missing field(s) {', '.join(missing)}")
        extra = set(item) - {"from", "to", "lag"}
        if extra:
            raise ProjectFileError(f"{ctx}: unknown field(s) {', '.join(sorted(extra))}")
        for key in ("from", "to"):
            if item[key] not in index:
                raise ProjectFileError(f"{ctx}.{key}: unknown activity {item[key]!r}")
        lag = item["lag"]
        if isinstance(lag, bool) or not isinstance(lag, (int, float)) or not math.isfinite(lag):
            raise ProjectFileError(f"{ctx}.lag: expected a finite number, got {lag!r}")
        i, j = index[item["to"]], index[item["from"]]
        M[i, j] = max(M[i, j], float(lag))
    return M


def project_from_dict(data, source: str = "<project>") -> ProjectSpec:
    if not isinstance(data, dict):
        raise ProjectFileError(f"{source}: top level must be an object")
    extra = set(data) - {"activities", "start_finish", "start_start"}
    if extra:
        raise ProjectFileError(f"{source}: unknown field(s) {', '.join(sorted(extra))}")
    names = data.get("activities")
    if not isinstance(names, list) or not names:
        raise ProjectFileError(f"{source}: 'activities' must be a non-empty list of labels")
    for k, name in enumerate(names):
        if not isinstance(name, str) or not name:
            raise ProjectFileError(f"{source}: activities[{k}]: expected a non-empty string")
    if len(set(names)) != len(names):
        dup = next(x for x in names if names.count(x) > 1)
        raise ProjectFileError(f"{source}: activities: duplicate label {dup!r}")
    if "start_finish" not in data:
        raise ProjectFileError(f"{source}: missing 'start_finish'")
    index = {name: i for i, name in enumerate(names)}
    C = _lag_matrix(data["start_finish"], index, f"{source}: start_finish")
    D = None
    if data.get("start_start") is not None:
        D = TropMatrix(MAX_PLUS, _lag_matrix(data["start_start"], index, f"{source}: start_start"))
    return ProjectSpec(TropMatrix(MAX_PLUS, C), D, tuple(names))


def _lags(M: TropMatrix, names):
    out = []
    for i, j in zip(*np.nonzero(np.isfinite(M.entries))):
        out.append({"from": names[j], "to": names[i], "lag": _num(M.entries[i, j])})
    return out


def project_to_dict(P: ProjectSpec) -> dict:
    data = {"activities": list(P.names), "start_finish": _lags(P.C, P.names)}
    if P.D is not None:
        data["start_start"] = _lags(P.D, P.names)
    return data


def loads_project(text: str, source: str = "<project>") -> ProjectSpec:
    return project_from_dict(_load_json(text, source), source)


def dumps_project(P: ProjectSpec) -> str:
    return json.dumps(project_to_dict(P), indent=2)


def read_project(path) -> ProjectSpec:
    with open(path, encoding="utf-8") as fh:
        return loads_project(fh.read(), str(path))


def write_project(P: ProjectSpec, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_project(P) + "\n")


@dataclass
class ScheduleReport:
    """Serialized schedule: per-activity start/finish, span, alpha, policy."""

    activities: list
    start: list
    finish: list
    span: float
    alpha: float
    anchor: str
    constrained: bool = False
    validation: Optional[dict] = field(default=None)

    @classmethod
    def from_schedule(cls, names, S: Schedule, constrained=False, validation=None):
        return cls(
            list(names),
            [float(v) for v in S.x.entries],
            [float(v) for v in S.y.entries],
            float(S.delta),
            float(S.alpha),
            S.policy,
            constrained,
            validation,
        )

    def to_schedule(self) -> Schedule:
        return Schedule(
            TropVector(MAX_PLUS, self.start),
            TropVector(MAX_PLUS, self.finish),
            SemifieldValue(MAX_PLUS, self.span),
            self.alpha,
            self.anchor,
        )

    def to_dict(self) -> dict:
        data = {
            "activities": list(self.activities),
            "schedule": [
                {"activity": a, "start": _num(s), "finish": _num(f)}
                for a, s, f in zip(self.activities, self.start, self.finish)
            ],
            "span": _num(self.span),
            "alpha": _num(self.alpha),
            "anchor": self.anchor,
            "constrained": self.constrained,
        }
        if self.validation is not None:
            data["validation"] = self.validation
        return data

    @classmethod
    def from_dict(cls, data, source: str = "<schedule>") -> "ScheduleReport":
        if not isinstance(data, dict):
            raise ProjectFileError(f"{source}: top level must be an object")
        try:
            rows = data["schedule"]
            activities = [r["activity"] for r in rows]
            start = [float(r["start"]) for r in rows]
            finish = [float(r["finish"]) for r in rows]
            span = float(data["span"])
            alpha = float(data.get("alpha", 0.0))
        except KeyError as exc:
            raise ProjectFileError(f"{source}: missing field {exc.args[0]!r}") from None
        except (TypeError, ValueError) as exc:
            raise ProjectFileError(f"{source}: {exc}") from None
        if "activities" in data and list(data["activities"]) != activities:
            raise ProjectFileError(f"{source}: 'activities' disagrees with 'schedule' rows")
        bad = [v for v in start + finish + [span] if not math.isfinite(v)]
        if bad:
            raise ProjectFileError(f"{source}: times must be finite, got {bad[0]!r}")
        return cls(
            activities, start, finish, span, alpha,
            str(data.get("anchor", "")), bool(data.get("constrained", False)),
            data.get("validation"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def loads_schedule(text: str, source: str = "<schedule>") -> ScheduleReport:
    return ScheduleReport.from_dict(_load_json(text, source), source)


def read_schedule(path) -> ScheduleReport:
    with open(path, encoding="utf-8") as fh:
        return loads_schedule(fh.read(), str(path))
