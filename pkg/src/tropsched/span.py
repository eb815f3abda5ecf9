"""Minimization of ``q^- B x (A x)^- p`` over regular vectors ``x``.

With ``A`` row regular, ``B`` column regular, ``p`` nonzero and ``q`` regular,
the minimum is

    delta = (A (q^- B)^-)^- p

and it is attained at every ``x = alpha (q^- B)^-`` with ``alpha > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import PreconditionError, SemifieldMismatchError, ShapeError
from .linalg import (
    TropMatrix,
    TropVector,
    _product,
    conjugate,
    is_regular_vector,
    is_zero,
    mat_mul,
    scalar_mul,
    to_scalar,
    zero_columns,
    zero_rows,
)
from .semifield import SemifieldValue


@dataclass(frozen=True)
class SpanProblem:
    A: TropMatrix
    B: TropMatrix
    p: TropVector
    q: TropVector

    @classmethod
    def symmetric(cls, A: TropMatrix) -> "SpanProblem":
        """The special case ``B = A`` and ``p = q = 1``."""
        ones = TropVector.ones(A.semifield, A.rows)
        return cls(A, A, ones, ones)

    @property
    def semifield(self):
        return self.A.semifield

    @property
    def n(self) -> int:
        return self.A.cols

    def check(self):
        """Raise :class:`PreconditionError` for the first failed hypothesis."""
        kinds = {self.A.semifield, self.B.semifield, self.p.semifield, self.q.semifield}
        if len(kinds) != 1:
            raise SemifieldMismatchError("A, B, p and q must share one semifield")
        if self.A.shape != self.B.shape:
            raise ShapeError(f"A is {self.A.shape} but B is {self.B.shape}")
        if self.p.dim != self.A.rows or self.q.dim != self.A.rows:
            raise ShapeError(
                f"p and q must have length {self.A.rows}, got {self.p.dim} and {self.q.dim}"
            )
        rows = zero_rows(self.A)
        if rows:
            raise PreconditionError(
                f"A must be row regular; row {rows[0]} is zero",
                hypothesis="row_regular", operand="A", index=rows[0],
            )
        cols = zero_columns(self.B)
        if cols:
            raise PreconditionError(
                f"B must be column regular; column {cols[0]} is zero",
                hypothesis="column_regular", operand="B", index=cols[0],
            )
        if is_zero(self.p):
            raise PreconditionError("p must be nonzero", hypothesis="nonzero", operand="p")
        if not is_regular_vector(self.q):
            bad = int(np.flatnonzero(self.q.entries == self.semifield.zero)[0])
            raise PreconditionError(
                f"q must be regular; entry {bad} is zero",
                hypothesis="regular", operand="q", index=bad,
            )
        return self


@dataclass(frozen=True)
class SpanSolution:
    """Minimum ``delta`` and the ray ``alpha * direction`` of minimizers."""

    delta: SemifieldValue
    direction: TropVector

    def at(self, alpha) -> TropVector:
        """The minimizer ``alpha * direction``."""
        if not isinstance(alpha, SemifieldValue):
            alpha = SemifieldValue(self.direction.semifield, alpha)
        return scalar_mul(alpha, self.direction)


def objective(P: SpanProblem, x: TropVector) -> SemifieldValue:
    """Evaluate ``q^- B x (A x)^- p`` at a regular ``x``."""
    if x.dim != P.n:
        raise ShapeError(f"x has length {x.dim}, expected {P.n}")
    if not is_regular_vector(x):
        raise PreconditionError("x must be regular", hypothesis="regular", operand="x")
    kind = P.semifield
    xs = x.entries[:, None]
    Ax = _product(kind, P.A.entries, xs)[:, 0]
    if np.all(Ax == kind.zero):
        raise PreconditionError(
            "A x is the zero vector", hypothesis="row_regular", operand="A"
        )
    Bx = _product(kind, P.B.entries, xs)[:, 0]
    left = kind.sum(kind.mul(kind.inv(P.q.entries), Bx))  # q^- B x
    right = kind.sum(kind.mul(kind.inv(Ax), P.p.entries))  # (A x)^- p
    return SemifieldValue(kind, float(kind.mul(left, right)))


def solve(P: SpanProblem) -> SpanSolution:
    P.check()
    direction = conjugate(mat_mul(conjugate(P.q), P.B))  # (q^- B)^-
    bound = mat_mul(P.A, direction)
    delta = to_scalar(mat_mul(conjugate(bound), P.p.as_column()))
    return SpanSolution(delta, direction)


def solve_symmetric(A: TropMatrix) -> SpanSolution:
    """Minimize ``1^T A x (A x)^- 1`` for a regular ``A``.

    The minimum is ``(A (1^T A)^-)^- 1``, attained at ``alpha (1^T A)^-``.
    """
    rows, cols = zero_rows(A), zero_columns(A)
    if rows or cols:
        which, idx = ("row", rows[0]) if rows else ("column", cols[0])
        raise PreconditionError(
            f"A must be regular; {which} {idx} is zero",
            hypothesis="regular", operand="A", index=idx,
        )
    return solve(SpanProblem.symmetric(A))
