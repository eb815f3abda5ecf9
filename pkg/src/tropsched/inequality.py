"""Regular solutions of the tropical linear inequality ``A x <= x``.

``Tr(A) = tr A + tr A^2 + ... + tr A^n`` decides solvability.  When
``Tr(A) <= 1`` every regular solution has the form ``x = A* u`` with
``A* = I + A + ... + A^(n-1)`` and ``u`` an arbitrary regular vector;
otherwise there is no regular solution at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import InfeasibleError, PreconditionError, ShapeError
from .linalg import (
    TropMatrix,
    TropVector,
    _product,
    is_regular_vector,
    mat_mul,
)
from .semifield import SemifieldValue


@dataclass(frozen=True)
class StarResult:
    """``Tr(A)`` together with ``A*`` when the latter is defined."""

    tr_value: SemifieldValue
    star: Optional[TropMatrix]
    # smallest k with tr(A^k) > 1; None when Tr(A) <= 1
    cycle_length: Optional[int] = None

    @property
    def defined(self) -> bool:
        return self.star is not None


def _check_square(A: TropMatrix):
    if A.rows != A.cols:
        raise ShapeError(f"expected a square matrix, got {A.shape}")


def _powers_pass(A: TropMatrix):
    """One pass over A^1..A^n collecting the trace sum and I + A + ... + A^(n-1)."""
    kind = A.semifield
    n = A.rows
    a = A.entries
    closure = np.full((n, n), kind.zero)
    np.fill_diagonal(closure, kind.one)
    tr_total = kind.zero
    first_positive = None
    power = a
    for k in range(1, n + 1):
        if k < n:
            closure = kind.add(closure, power)
        tr_k = float(kind.sum(np.diagonal(power)))
        tr_total = float(kind.add(tr_total, tr_k))
        if first_positive is None and kind.lt(kind.one, tr_k):
            first_positive = k
        if k < n:
            power = _product(kind, power, a)
    return tr_total, closure, first_positive


def tr_fn(A: TropMatrix) -> SemifieldValue:
    """``tr A (+) tr A^2 (+) ... (+) tr A^n``."""
    _check_square(A)
    tr_total, _, _ = _powers_pass(A)
    return SemifieldValue(A.semifield, tr_total)


def star(A: TropMatrix) -> StarResult:
    """Kleene star ``I + A + ... + A^(n-1)``, present only if ``Tr(A) <= 1``."""
    _check_square(A)
    kind = A.semifield
    tr_total, closure, first_positive = _powers_pass(A)
    tr_value = SemifieldValue(kind, tr_total)
    if kind.leq(tr_total, kind.one):
        return StarResult(tr_value, TropMatrix(kind, closure))
    return StarResult(tr_value, None, cycle_length=first_positive)


def require_star(A: TropMatrix) -> TropMatrix:
    """Return ``A*`` or raise :class:`InfeasibleError` when ``Tr(A) > 1``."""
    res = star(A)
    if res.star is None:
        raise InfeasibleError(
            f"A x <= x has no regular solution: Tr(A) = {res.tr_value.value:g} exceeds "
            f"{A.semifield.one:g} (first violating power k = {res.cycle_length})",
            tr_value=res.tr_value,
            cycle_length=res.cycle_length,
        )
    return res.star


def solve_x_geq_Ax(A: TropMatrix, u: TropVector) -> TropVector:
    """The regular solution ``x = A* u`` of ``A x <= x`` generated by ``u``.

    Raises :class:`InfeasibleError` if ``Tr(A) > 1`` and
    :class:`PreconditionError` if ``u`` has a zero entry.
    """
    _check_square(A)
    if u.dim != A.rows:
        raise ShapeError(f"u has length {u.dim}, expected {A.rows}")
    if not is_regular_vector(u):
        bad = int(np.flatnonzero(u.entries == u.semifield.zero)[0])
        raise PreconditionError(
            f"generator u must be regular; entry {bad} is zero",
            hypothesis="regular",
            operand="u",
            index=bad,
        )
    return mat_mul(require_star(A), u)


def satisfies(A: TropMatrix, x: TropVector) -> bool:
    """Whether ``A x <= x`` holds entrywise."""
    kind = A.semifield
    ax = mat_mul(A, x)
    return bool(np.all(kind.leq(ax.entries, x.entries)))


__all__ = [
    "StarResult",
    "tr_fn",
    "star",
    "require_star",
    "solve_x_geq_Ax",
    "satisfies",
]
