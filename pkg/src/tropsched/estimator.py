"""scikit-learn style front ends.

``SpanMinimizer`` fits the general problem ``min q^- B x (A x)^- p`` and
``JustInTimeScheduler`` fits a project's lag matrices.  Both follow the usual
conventions: hyperparameters in ``__init__``, learned state in trailing
underscore attributes, ``get_params``/``set_params`` from ``BaseEstimator``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import scheduler, span
from .linalg import TropVector
from .scheduler import AnchorPolicy, ProjectSpec
from .semifield import Semifield, SemifieldValue
from .validation import check_matrix, check_points, check_vector


class SpanMinimizer(BaseEstimator):
    """Closed-form minimizer of ``q^- B x (A x)^- p`` over regular ``x``.

    Parameters
    ----------
    semifield : str, default="max-plus"
        One of ``max-plus``, ``min-plus``, ``max-times``, ``min-times``.

    Attributes
    ----------
    delta_ : float
        The minimum value.
    direction_ : ndarray of shape (n,)
        ``(q^- B)^-``; every ``alpha * direction_`` is a minimizer.
    problem_ : SpanProblem
    n_features_in_ : int
        Length of ``x``.
    """

    def __init__(self, semifield="max-plus"):
        self.semifield = semifield

    def fit(self, A, B=None, p=None, q=None):
        """``B`` defaults to ``A``; ``p`` and ``q`` default to the all-one vector."""
        kind = Semifield.coerce(self.semifield)
        A = check_matrix(A, kind, name="A")
        B = A if B is None else check_matrix(B, kind, name="B")
        p = TropVector.ones(kind, A.rows) if p is None else check_vector(p, kind, A.rows, "p")
        q = TropVector.ones(kind, A.rows) if q is None else check_vector(q, kind, A.rows, "q")
        self.problem_ = span.SpanProblem(A, B, p, q)
        self.solution_ = span.solve(self.problem_)
        self.delta_ = float(self.solution_.delta)
        self.direction_ = np.array(self.solution_.direction.entries)
        self.n_features_in_ = A.cols
        return self

    def predict(self, alpha=None):
        """The minimizer ``alpha * direction_`` (``alpha`` defaults to one)."""
        check_is_fitted(self, "solution_")
        kind = self.problem_.semifield
        alpha = kind.one if alpha is None else alpha
        return np.array(self.solution_.at(SemifieldValue(kind, alpha)).entries)

    def objective(self, X):
        """Objective value at each row of ``X``."""
        check_is_fitted(self, "solution_")
        kind = self.problem_.semifield
        X = check_points(X, self.n_features_in_)
        return np.array([
            float(span.objective(self.problem_, TropVector(kind, row))) for row in X
        ])


class JustInTimeScheduler(BaseEstimator):
    """Minimum-span scheduler for start-finish / start-start lag matrices.

    Parameters
    ----------
    anchor : str, default="earliest"
        ``"earliest"``, ``"alpha=<v>"`` or ``"due=<T>"``; fixes the free shift
        of the optimal family when :meth:`predict` is called.
    ignore_start_start : bool, default=False
        Solve the reduced problem without ``D``.

    Attributes
    ----------
    delta_ : float
        Optimal span.
    x_direction_, y_direction_ : ndarray of shape (n,)
        Initiation and completion times at ``alpha = 0``.
    star_ : ndarray of shape (n, n) or None
        Kleene star of ``D`` when start-start lags were used.
    family_ : ScheduleFamily
    project_ : ProjectSpec
    """

    def __init__(self, anchor="earliest", ignore_start_start=False):
        self.anchor = anchor
        self.ignore_start_start = ignore_start_start

    def fit(self, C, D=None, names=None):
        """Raises ``InfeasibleError`` if ``Tr(D) > 0`` and ``PreconditionError``
        if ``C`` is not regular."""
        C = check_matrix(C, square=True, name="C")
        if D is not None:
            D = check_matrix(D, square=True, name="D")
        self.project_ = ProjectSpec(C, D, tuple(names) if names is not None else ())
        if D is None or self.ignore_start_start:
            self.family_ = scheduler.solve_unconstrained(self.project_)
        else:
            self.family_ = scheduler.solve_constrained(self.project_)
        self.delta_ = float(self.family_.delta)
        self.x_direction_ = np.array(self.family_.x_direction.entries)
        self.y_direction_ = np.array(self.family_.y_direction.entries)
        self.star_ = None if self.family_.star is None else np.array(self.family_.star.entries)
        self.n_features_in_ = C.rows
        return self

    def predict(self, anchor=None) -> scheduler.Schedule:
        """Concrete schedule for ``anchor`` (defaults to the ``anchor`` param)."""
        check_is_fitted(self, "family_")
        policy = AnchorPolicy.parse(self.anchor if anchor is None else anchor)
        return scheduler.anchor(self.family_, policy)

    def fit_predict(self, C, D=None, names=None):
        return self.fit(C, D, names).predict()

    def transform(self, alphas):
        """Completion times for each shift in ``alphas``, one row per shift."""
        check_is_fitted(self, "family_")
        alphas = np.asarray(alphas, dtype=float).reshape(-1, 1)
        return alphas + self.y_direction_[None, :]
