"""Just-in-time project scheduling in max-plus algebra.

A project of ``n`` activities has initiation times ``x`` and completion
times ``y``.  Start-finish lags ``C`` tie them by ``y = C x`` (each activity
completes as early as its lags allow), optional start-start lags ``D``
require ``D x <= x``, and the goal is to make completions as simultaneous as
possible, i.e. to minimize the span ``max y - min y``.

For regular ``C`` and ``Tr(D) <= 0`` the optimal span is

    delta = (C D* (1^T C D*)^-)^- 1

with optimal schedules ``x = alpha D* (1^T C D*)^-`` and
``y = alpha C D* (1^T C D*)^-`` for every real ``alpha``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .exceptions import InfeasibleError, PreconditionError, ShapeError, TropicalError
from .inequality import require_star
from .linalg import (
    TropMatrix,
    TropVector,
    conjugate,
    is_regular_vector,
    mat_mul,
    scalar_mul,
    to_scalar,
    zero_columns,
    zero_rows,
)
from .semifield import MAX_PLUS, SemifieldValue
from .span import solve_symmetric


@dataclass(frozen=True)
class ProjectSpec:
    """Lag matrices of a project; ``-inf`` marks an unspecified lag."""

    C: TropMatrix
    D: Optional[TropMatrix] = None
    names: Sequence[str] = ()

    def __post_init__(self):
        C = self.C if isinstance(self.C, TropMatrix) else TropMatrix(MAX_PLUS, self.C)
        D = self.D
        if D is not None and not isinstance(D, TropMatrix):
            D = TropMatrix(MAX_PLUS, D)
        if C.semifield is not MAX_PLUS:
            raise TypeError("scheduling lags live in max-plus algebra")
        if C.rows != C.cols:
            raise ShapeError(f"C must be square, got {C.shape}")
        if D is not None:
            if D.semifield is not MAX_PLUS:
                raise TypeError("scheduling lags live in max-plus algebra")
            if D.shape != C.shape:
                raise ShapeError(f"D is {D.shape} but C is {C.shape}")
        names = tuple(self.names) or tuple(f"a{i + 1}" for i in range(C.rows))
        if len(names) != C.rows:
            raise ShapeError(f"{len(names)} names for {C.rows} activities")
        if len(set(names)) != len(names):
            raise ValueError("activity names must be unique")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return self.C.rows

    def without_start_start(self) -> "ProjectSpec":
        return ProjectSpec(self.C, None, self.names)


@dataclass(frozen=True)
class ScheduleFamily:
    """Optimal span and the direction vectors of all optimal schedules."""

    delta: SemifieldValue
    x_direction: TropVector
    y_direction: TropVector
    star: Optional[TropMatrix] = None

    @property
    def constrained(self) -> bool:
        return self.star is not None


@dataclass(frozen=True)
class Schedule:
    x: TropVector
    y: TropVector
    delta: SemifieldValue
    alpha: float
    policy: str = "alpha=0"


@dataclass(frozen=True)
class AnchorPolicy:
    """How to fix the free shift ``alpha`` of an optimal family.

    ``kind`` is ``"alpha"`` (use ``value`` directly), ``"due"`` (latest
    completion equals ``value``) or ``"earliest"`` (earliest initiation at 0).
    """

    kind: str = "earliest"
    value: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("alpha", "due", "earliest"):
            raise ValueError(f"unknown anchor policy {self.kind!r}")
        if self.kind == "earliest":
            if self.value is not None:
                raise ValueError("'earliest' takes no value")
        else:
            if self.value is None or not math.isfinite(float(self.value)):
                raise ValueError(f"anchor '{self.kind}' needs a finite value")
            object.__setattr__(self, "value", float(self.value))

    @classmethod
    def parse(cls, text: str) -> "AnchorPolicy":
        """Parse ``alpha=<v>``, ``due=<T>`` or ``earliest``."""
        text = text.strip()
        if text == "earliest":
            return cls("earliest")
        key, sep, val = text.partition("=")
        if not sep or key.strip() not in ("alpha", "due"):
            raise ValueError(f"anchor must be alpha=<v>, due=<T> or earliest, got {text!r}")
        try:
            num = float(val)
        except ValueError:
            raise ValueError(f"anchor value {val!r} is not a number") from None
        return cls(key.strip(), num)

    def __str__(self):
        if self.kind == "earliest":
            return "earliest"
        return f"{self.kind}={self.value:g}"


def alpha_policy(value) -> AnchorPolicy:
    return AnchorPolicy("alpha", value)


def due_date(T) -> AnchorPolicy:
    return AnchorPolicy("due", T)


def earliest_nonnegative() -> AnchorPolicy:
    return AnchorPolicy("earliest")


def span(y: TropVector) -> SemifieldValue:
    """Span seminorm ``1^T y y^- 1``, i.e. ``max y - min y``."""
    if y.semifield is not MAX_PLUS:
        raise TypeError("span is defined for max-plus vectors")
    if not is_regular_vector(y):
        raise PreconditionError(
            "span needs finite completion times", hypothesis="regular", operand="y"
        )
    ones = TropVector.ones(MAX_PLUS, y.dim)
    return to_scalar(mat_mul(mat_mul(ones.as_row(), y.as_column()), mat_mul(conjugate(y), ones.as_column())))


def _check_C(P: ProjectSpec):
    rows, cols = zero_rows(P.C), zero_columns(P.C)
    if rows:
        i = rows[0]
        raise PreconditionError(
            f"C is not regular: activity {P.names[i]!r} has no start-finish lag "
            "determining its completion",
            hypothesis="regular", operand="C", index=i,
        )
    if cols:
        j = cols[0]
        raise PreconditionError(
            f"C is not regular: the start of activity {P.names[j]!r} constrains no completion",
            hypothesis="regular", operand="C", index=j,
        )
    diag = np.diagonal(P.C.entries)
    low = np.flatnonzero(diag < 0)
    if low.size:
        labels = ", ".join(repr(P.names[i]) for i in low)
        warnings.warn(f"negative start-finish lag of an activity on itself: {labels}", stacklevel=3)


def _family(P: ProjectSpec, Dstar: Optional[TropMatrix]) -> ScheduleFamily:
    _check_C(P)
    CD = P.C if Dstar is None else mat_mul(P.C, Dstar)
    sol = solve_symmetric(CD)
    x0 = sol.direction if Dstar is None else mat_mul(Dstar, sol.direction)
    y0 = mat_mul(P.C, x0)
    return ScheduleFamily(sol.delta, x0, y0, Dstar)


def solve_constrained(P: ProjectSpec) -> ScheduleFamily:
    """Optimal family under both ``C x = y`` and ``D x <= x``.

    Raises :class:`InfeasibleError` when ``Tr(D) > 0`` (a start-start cycle
    of positive total lag) and :class:`PreconditionError` for irregular ``C``.
    A missing ``D`` is the zero matrix, whose star is the identity.
    """
    D = P.D if P.D is not None else TropMatrix.zeros(MAX_PLUS, P.n)
    try:
        Dstar = require_star(D)
    except InfeasibleError as exc:
        raise InfeasibleError(
            "start-start lags are contradictory: a cycle of "
            f"{exc.cycle_length} activities has positive total lag (Tr(D) = {exc.tr_value.value:g})",
            tr_value=exc.tr_value,
            cycle_length=exc.cycle_length,
        ) from None
    return _family(P, Dstar)


def solve_unconstrained(P: ProjectSpec) -> ScheduleFamily:
    """Optimal family under ``C x = y`` alone; ``D`` is ignored."""
    return _family(P, None)


def anchor(family: ScheduleFamily, policy=None) -> Schedule:
    """Pick one schedule of ``family``; ``policy`` defaults to earliest."""
    if policy is None:
        policy = AnchorPolicy("earliest")
    elif isinstance(policy, str):
        policy = AnchorPolicy.parse(policy)
    if policy.kind == "alpha":
        alpha = policy.value
    elif policy.kind == "due":
        alpha = policy.value - float(np.max(family.y_direction.entries))
    else:
        alpha = -float(np.min(family.x_direction.entries))
    a = SemifieldValue(MAX_PLUS, alpha)
    x = scalar_mul(a, family.x_direction)
    y = scalar_mul(a, family.y_direction)
    return Schedule(x, y, family.delta, alpha, str(policy))


@dataclass
class ValidationReport:
    """Per-constraint outcome; index lists are 0-based activity positions."""

    start_finish_violations: list = field(default_factory=list)
    start_start_violations: list = field(default_factory=list)
    span_ok: bool = True
    span_actual: Optional[float] = None
    messages: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.start_finish_violations or self.start_start_violations) and self.span_ok

    def to_dict(self, names=None):
        label = (lambda i: names[i]) if names else (lambda i: i)
        return {
            "ok": self.ok,
            "start_finish_violations": [label(i) for i in self.start_finish_violations],
            "start_start_violations": [label(i) for i in self.start_start_violations],
            "span_ok": self.span_ok,
            "messages": list(self.messages),
        }


def validate(P: ProjectSpec, S: Schedule, atol: float = 0.0) -> ValidationReport:
    """Check ``C x = y``, ``D x <= x`` and ``delta == span(y)``; never raises
    on a violated constraint."""
    if S.x.dim != P.n or S.y.dim != P.n:
        raise ShapeError(f"schedule has {S.x.dim}/{S.y.dim} entries for {P.n} activities")
    rep = ValidationReport()
    x, y = S.x.entries, S.y.entries
    cx = mat_mul(P.C, S.x).entries
    with np.errstate(invalid="ignore"):
        sf_bad = ~(np.abs(cx - y) <= atol) & ~(cx == y)
    for i in np.flatnonzero(sf_bad):
        rep.start_finish_violations.append(int(i))
        rep.messages.append(
            f"start-finish: completion of {P.names[i]!r} is {y[i]:g}, lags give {cx[i]:g}"
        )
    if P.D is not None:
        dx = mat_mul(P.D, S.x).entries
        for i in np.flatnonzero(dx > x + atol):
            rep.start_start_violations.append(int(i))
            rep.messages.append(
                f"start-start: {P.names[i]!r} starts at {x[i]:g}, lags require >= {dx[i]:g}"
            )
    if is_regular_vector(S.y):
        actual = float(span(S.y))
        rep.span_actual = actual
        rep.span_ok = abs(actual - float(S.delta)) <= atol
        if not rep.span_ok:
            rep.messages.append(f"span: reported {float(S.delta):g}, actual {actual:g}")
    else:
        rep.span_ok = False
        rep.messages.append("span: completion times are not all finite")
    return rep


@dataclass(frozen=True)
class SolveReport:
    """Outcome of :func:`solve`: ``status`` is ``"optimal"``,
    ``"infeasible"`` or ``"precondition"``."""

    status: str
    family: Optional[ScheduleFamily] = None
    message: str = ""
    error: Optional[TropicalError] = None

    @property
    def ok(self) -> bool:
        return self.status == "optimal"


def solve(P: ProjectSpec, ignore_start_start: bool = False) -> SolveReport:
    """Dispatch to the constrained or unconstrained solver and capture failures."""
    try:
        if P.D is None or ignore_start_start:
            fam = solve_unconstrained(P)
        else:
            fam = solve_constrained(P)
    except InfeasibleError as exc:
        return SolveReport("infeasible", message=str(exc), error=exc)
    except PreconditionError as exc:
        return SolveReport("precondition", message=str(exc), error=exc)
    return SolveReport("optimal", fam)
