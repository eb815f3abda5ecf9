"""Brute-force grid search used to cross-check the closed-form solvers.

Everything here is written in conventional ``max``/``+`` arithmetic on plain
numpy arrays and deliberately avoids :mod:`tropsched.linalg`, so a bug in
the tropical code cannot hide itself.  Grids are integer-valued, which keeps
the arithmetic exact for integer data.  Ties are broken by the
lexicographically smallest argmin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

DEFAULT_CAP = 10**6
_CHUNK = 1 << 16


class GridTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    dim: int
    lo: int
    hi: int
    step: int = 1
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("grid dimension must be positive")
        if self.step < 1:
            raise ValueError("grid step must be positive")
        if self.lo > self.hi:
            raise ValueError(f"empty grid: lo={self.lo} > hi={self.hi}")
        if self.size > self.cap:
            raise GridTooLargeError(
                f"grid has {self.size} points, cap is {self.cap}; tighten the bounds or raise the step"
            )

    @classmethod
    def parse(cls, text: str, dim: int, cap: int = DEFAULT_CAP) -> "GridSpec":
        """Parse ``lo:hi`` or ``lo:hi:step``."""
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"grid must be lo:hi[:step], got {text!r}")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"grid bounds must be integers, got {text!r}") from None
        return cls(dim, nums[0], nums[1], nums[2] if len(nums) == 3 else 1, cap)

    @property
    def axis(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, self.step, dtype=float)

    @property
    def size(self) -> int:
        return ((self.hi - self.lo) // self.step + 1) ** self.dim

    def chunks(self):
        """Yield blocks of grid points (rows) in lexicographic order."""
        axis = self.axis
        shape = (axis.size,) * self.dim
        for start in range(0, self.size, _CHUNK):
            flat = np.arange(start, min(start + _CHUNK, self.size))
            idx = np.unravel_index(flat, shape)
            yield np.stack([axis[i] for i in idx], axis=1)


@dataclass(frozen=True)
class GridResult:
    """Minimum over feasible grid points; ``value`` is None if none were feasible."""

    value: Optional[float]
    argmin: Optional[tuple]
    feasible_points: int

    @property
    def feasible(self) -> bool:
        return self.value is not None


def _dense(M) -> np.ndarray:
    return np.asarray(getattr(M, "entries", M), dtype=float)


def _maxplus_apply(M: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Rows of X are points; returns rows (M x)_i = max_j (m_ij + x_j)."""
    return np.max(M[None, :, :] + X[:, None, :], axis=2)


def _best(values, points, state):
    if values.size == 0:
        return state
    k = int(np.argmin(values))
    v = float(values[k])
    if state[0] is None or v < state[0]:
        return v, tuple(float(t) for t in points[k]), state[2] + values.size
    return state[0], state[1], state[2] + values.size


def grid_min_span(C, D, g: GridSpec) -> GridResult:
    """Minimize ``max(Cx) - min(Cx)`` over integer x with ``Dx <= x``."""
    C = _dense(C)
    Dm = None if D is None else _dense(D)
    n = C.shape[0]
    if C.shape != (n, n) or g.dim != n:
        raise ValueError(f"C is {C.shape}, grid has dimension {g.dim}")
    state = (None, None, 0)
    for X in g.chunks():
        if Dm is not None:
            X = X[np.all(_maxplus_apply(Dm, X) <= X, axis=1)]
        Y = _maxplus_apply(C, X)
        spans = Y.max(axis=1) - Y.min(axis=1)
        state = _best(spans, X, state)
    return GridResult(*state)


def grid_min_objective(P, g: GridSpec) -> GridResult:
    """Minimize ``max_i(Bx_i - q_i) + max_i(p_i - Ax_i)`` over the grid.

    Max-plus only.  ``P`` needs attributes ``A``, ``B``, ``p``, ``q``.
    """
    A, B = _dense(P.A), _dense(P.B)
    p, q = _dense(P.p), _dense(P.q)
    if g.dim != A.shape[1]:
        raise ValueError(f"A has {A.shape[1]} columns, grid has dimension {g.dim}")
    state = (None, None, 0)
    for X in g.chunks():
        left = np.max(_maxplus_apply(B, X) - q[None, :], axis=1)
        right = np.max(p[None, :] - _maxplus_apply(A, X), axis=1)
        state = _best(left + right, X, state)
    return GridResult(*state)


def grid_solutions_leq(A, g: GridSpec) -> np.ndarray:
    """All grid points x with ``max_j (a_ij + x_j) <= x_i`` for every i."""
    A = _dense(A)
    found = [X[np.all(_maxplus_apply(A, X) <= X, axis=1)] for X in g.chunks()]
    return np.concatenate(found, axis=0)
