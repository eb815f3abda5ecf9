"""Input checks that turn array-likes into tropical matrices and vectors."""

from __future__ import annotations

import numpy as np

from .exceptions import ShapeError
from .linalg import TropMatrix, TropVector
from .semifield import Semifield


def check_matrix(A, semifield="max-plus", square=False, name="A") -> TropMatrix:
    """Coerce ``A`` to a :class:`TropMatrix`.

    Accepts an existing matrix (its semifield must match) or any 2-D
    array-like; ``None`` entries become the semifield zero.  NaN is rejected.
    """
    kind = Semifield.coerce(semifield)
    if isinstance(A, TropMatrix):
        if A.semifield is not kind:
            raise TypeError(f"{name} is over {A.semifield.value}, expected {kind.value}")
        M = A
    else:
        arr = np.array(A, dtype=object)
        if arr.ndim != 2:
            raise ShapeError(f"{name} must be 2-D, got {arr.ndim}-D")
        arr[arr == None] = kind.zero  # noqa: E711
        M = TropMatrix(kind, arr.astype(float))
    if square and M.rows != M.cols:
        raise ShapeError(f"{name} must be square, got {M.shape}")
    return M


def check_vector(x, semifield="max-plus", dim=None, name="x") -> TropVector:
    kind = Semifield.coerce(semifield)
    if isinstance(x, TropVector):
        if x.semifield is not kind:
            raise TypeError(f"{name} is over {x.semifield.value}, expected {kind.value}")
        v = x
    else:
        arr = np.array(x, dtype=object).reshape(-1)
        arr[arr == None] = kind.zero  # noqa: E711
        v = TropVector(kind, arr.astype(float))
    if dim is not None and v.dim != dim:
        raise ShapeError(f"{name} has length {v.dim}, expected {dim}")
    return v


def check_points(X, dim, name="X") -> np.ndarray:
    """A 2-D float array of candidate vectors, one per row."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != dim:
        raise ShapeError(f"{name} must have shape (n_points, {dim}), got {arr.shape}")
    if np.isnan(arr).any():
        raise ValueError(f"{name} contains NaN")
    return arr
