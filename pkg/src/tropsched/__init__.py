"""Tropical linear algebra and minimum-span just-in-time scheduling."""

from .estimator import JustInTimeScheduler, SpanMinimizer
from .exceptions import (
    DomainError,
    InfeasibleError,
    PreconditionError,
    SemifieldMismatchError,
    ShapeError,
    TropicalError,
)
from .inequality import StarResult, solve_x_geq_Ax, star, tr_fn
from .linalg import TropMatrix, TropVector
from .scheduler import (
    AnchorPolicy,
    ProjectSpec,
    Schedule,
    ScheduleFamily,
    anchor,
    solve_constrained,
    solve_unconstrained,
    span,
    validate,
)
from .semifield import MAX_PLUS, MAX_TIMES, MIN_PLUS, MIN_TIMES, Semifield, SemifieldValue
from .span import SpanProblem, SpanSolution

__version__ = "0.1.0"

__all__ = [
    "AnchorPolicy",
    "DomainError",
    "InfeasibleError",
    "JustInTimeScheduler",
    "MAX_PLUS",
    "MAX_TIMES",
    "MIN_PLUS",
    "MIN_TIMES",
    "PreconditionError",
    "ProjectSpec",
    "Schedule",
    "ScheduleFamily",
    "Semifield",
    "SemifieldMismatchError",
    "SemifieldValue",
    "ShapeError",
    "SpanMinimizer",
    "SpanProblem",
    "SpanSolution",
    "StarResult",
    "TropMatrix",
    "TropVector",
    "TropicalError",
    "anchor",
    "solve_constrained",
    "solve_unconstrained",
    "solve_x_geq_Ax",
    "span",
    "star",
    "tr_fn",
    "validate",
]
