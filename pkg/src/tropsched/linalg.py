"""Dense matrix and vector algebra over an idempotent semifield."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, SemifieldMismatchError, ShapeError
from .semifield import Semifield, SemifieldValue

COLLINEAR_RTOL = 1e-9


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TropMatrix:
    """An ``rows x cols`` matrix over ``semifield`` stored row-major."""

    semifield: Semifield
    entries: np.ndarray

    def __post_init__(self):
        kind = Semifield.coerce(self.semifield)
        arr = np.asarray(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"matrix entries must be a non-empty 2-D array, got shape {arr.shape}")
        kind.check(arr)
        object.__setattr__(self, "semifield", kind)
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def zeros(cls, semifield, rows, cols=None):
        kind = Semifield.coerce(semifield)
        return cls(kind, np.full((rows, rows if cols is None else cols), kind.zero))

    @classmethod
    def identity(cls, semifield, n):
        kind = Semifield.coerce(semifield)
        arr = np.full((n, n), kind.zero)
        np.fill_diagonal(arr, kind.one)
        return cls(kind, arr)

    @property
    def shape(self):
        return self.entries.shape

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return (
            self.semifield is other.semifield
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    __hash__ = None

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"TropMatrix({self.semifield.value}, {self.entries.tolist()})"

    def tolist(self):
        return self.entries.tolist()


@dataclass(frozen=True, eq=False)
class TropVector:
    """A column vector over ``semifield``."""

    semifield: Semifield
    entries: np.ndarray

    def __post_init__(self):
        kind = Semifield.coerce(self.semifield)
        arr = np.asarray(self.entries, dtype=float)
        if arr.ndim == 2 and 1 in arr.shape:
            arr = arr.reshape(-1)
        if arr.ndim != 1 or arr.size < 1:
            raise ShapeError(f"vector entries must be a non-empty 1-D array, got shape {arr.shape}")
        kind.check(arr)
        object.__setattr__(self, "semifield", kind)
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def ones(cls, semifield, dim):
        """The all-identity vector."""
        kind = Semifield.coerce(semifield)
        return cls(kind, np.full(dim, kind.one))

    @classmethod
    def zeros(cls, semifield, dim):
        kind = Semifield.coerce(semifield)
        return cls(kind, np.full(dim, kind.zero))

    @property
    def dim(self):
        return self.entries.shape[0]

    def __len__(self):
        return self.dim

    def __getitem__(self, idx):
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, TropVector):
            return NotImplemented
        return (
            self.semifield is other.semifield
            and self.dim == other.dim
            and bool(np.array_equal(self.entries, other.entries))
        )

    __hash__ = None

    def __add__(self, other):
        return vec_add(self, other)

    def __repr__(self):
        return f"TropVector({self.semifield.value}, {self.entries.tolist()})"

    def tolist(self):
        return self.entries.tolist()

    def as_column(self) -> TropMatrix:
        return TropMatrix(self.semifield, self.entries.reshape(-1, 1))

    def as_row(self) -> TropMatrix:
        return TropMatrix(self.semifield, self.entries.reshape(1, -1))


def _same_field(a, b) -> Semifield:
    if a.semifield is not b.semifield:
        raise SemifieldMismatchError(
            f"cannot combine {a.semifield.value} with {b.semifield.value}"
        )
    return a.semifield


def as_matrix(obj) -> TropMatrix:
    """View a vector as an ``n x 1`` column; matrices pass through."""
    if isinstance(obj, TropVector):
        return obj.as_column()
    if isinstance(obj, TropMatrix):
        return obj
    raise TypeError(f"expected TropMatrix or TropVector, got {type(obj).__name__}")


def mat_add(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    kind = _same_field(A, B)
    if A.shape != B.shape:
        raise ShapeError(f"cannot add {A.shape} and {B.shape} matrices")
    return TropMatrix(kind, kind.add(A.entries, B.entries))


def vec_add(x: TropVector, y: TropVector) -> TropVector:
    kind = _same_field(x, y)
    if x.dim != y.dim:
        raise ShapeError(f"cannot add vectors of length {x.dim} and {y.dim}")
    return TropVector(kind, kind.add(x.entries, y.entries))


def _product(kind: Semifield, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # {ab}_ij = (+)_k a_ik (x) b_kj
    return kind.sum(kind.mul(a[:, :, None], b[None, :, :]), axis=1)


def mat_mul(A, B):
    """Tropical product of two matrices, or of a matrix and a column vector.

    A vector right operand gives a vector result.
    """
    kind = _same_field(A, B)
    left = as_matrix(A)
    right = as_matrix(B)
    if left.cols != right.rows:
        raise ShapeError(f"cannot multiply {left.shape} by {right.shape}")
    out = _product(kind, left.entries, right.entries)
    if isinstance(B, TropVector):
        return TropVector(kind, out[:, 0])
    return TropMatrix(kind, out)


def mat_vec(A: TropMatrix, x: TropVector) -> TropVector:
    return mat_mul(A, x)


def row_vec(r: TropMatrix, x: TropVector) -> SemifieldValue:
    """Inner product of a ``1 x n`` row with a column vector."""
    return to_scalar(mat_mul(r, x.as_column()))


def to_scalar(A: TropMatrix) -> SemifieldValue:
    if A.shape != (1, 1):
        raise ShapeError(f"expected a 1x1 matrix, got {A.shape}")
    return SemifieldValue(A.semifield, A.entries[0, 0])


def scalar_mul(c: SemifieldValue, A):
    """Scale a matrix or a vector entrywise by ``c``."""
    kind = _same_field(c, A)
    return type(A)(kind, kind.mul(c.value, A.entries))


def transpose(A) -> TropMatrix:
    if isinstance(A, TropVector):
        return A.as_row()
    return TropMatrix(A.semifield, A.entries.T)


def trace(A: TropMatrix) -> SemifieldValue:
    if A.rows != A.cols:
        raise ShapeError(f"trace needs a square matrix, got {A.shape}")
    return SemifieldValue(A.semifield, A.semifield.sum(np.diagonal(A.entries)))


def conjugate(x):
    """Multiplicative conjugate transpose.

    A column vector maps to a ``1 x n`` row matrix and a ``1 x n`` row matrix
    maps to a column vector; nonzero entries are inverted, zeros stay zero.

    >>> conjugate(TropVector("max-plus", [4, 3, 3])).tolist()
    [[-4.0, -3.0, -3.0]]
    """
    kind = x.semifield
    if isinstance(x, TropVector):
        entries = x.entries
        to_column = False
    elif isinstance(x, TropMatrix) and x.rows == 1:
        entries = x.entries[0]
        to_column = True
    elif isinstance(x, TropMatrix) and x.cols == 1:
        entries = x.entries[:, 0]
        to_column = False
    else:
        raise ShapeError(f"conjugate is defined for vectors only, got shape {x.shape}")
    if np.all(entries == kind.zero):
        raise DomainError("conjugate of the zero vector is undefined")
    out = kind.inv(entries)
    return TropVector(kind, out) if to_column else TropMatrix(kind, out.reshape(1, -1))


def is_row_regular(A: TropMatrix) -> bool:
    return bool(np.all(np.any(A.entries != A.semifield.zero, axis=1)))


def is_column_regular(A: TropMatrix) -> bool:
    return bool(np.all(np.any(A.entries != A.semifield.zero, axis=0)))


def is_regular(A: TropMatrix) -> bool:
    return is_row_regular(A) and is_column_regular(A)


def is_regular_vector(x: TropVector) -> bool:
    return bool(np.all(x.entries != x.semifield.zero))


def is_zero(x) -> bool:
    return bool(np.all(x.entries == x.semifield.zero))


def zero_rows(A: TropMatrix) -> list[int]:
    return np.flatnonzero(np.all(A.entries == A.semifield.zero, axis=1)).tolist()


def zero_columns(A: TropMatrix) -> list[int]:
    return np.flatnonzero(np.all(A.entries == A.semifield.zero, axis=0)).tolist()


def entrywise_leq(A, B) -> bool:
    """``A <= B`` in the semifield order, entry by entry."""
    kind = _same_field(A, B)
    if A.entries.shape != B.entries.shape:
        raise ShapeError(f"cannot compare shapes {A.entries.shape} and {B.entries.shape}")
    return bool(np.all(kind.leq(A.entries, B.entries)))


def collinear(x: TropVector, y: TropVector):
    """Return ``c`` with ``y = c x``, or ``None`` when no such scalar exists."""
    kind = _same_field(x, y)
    if x.dim != y.dim:
        raise ShapeError(f"vectors of length {x.dim} and {y.dim}")
    xz = x.entries == kind.zero
    yz = y.entries == kind.zero
    if not np.array_equal(xz, yz):
        return None
    if xz.all():
        return SemifieldValue.one(kind)
    k = int(np.flatnonzero(~xz)[0])
    c = float(kind.mul(kind.inv(x.entries[k]), y.entries[k]))
    scaled = kind.mul(c, x.entries)
    if kind.is_additive:
        ok = np.array_equal(scaled, y.entries)
    else:
        ok = np.allclose(scaled, y.entries, rtol=COLLINEAR_RTOL, atol=0.0)
    return SemifieldValue(kind, c) if ok else None


def matrix_power(A: TropMatrix, k: int) -> TropMatrix:
    """``A^k`` for ``k >= 0`` by repeated multiplication."""
    if A.rows != A.cols:
        raise ShapeError(f"powers need a square matrix, got {A.shape}")
    if k < 0:
        raise DomainError("negative matrix powers are undefined")
    out = TropMatrix.identity(A.semifield, A.rows)
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def drop_columns(A: TropMatrix, cols) -> TropMatrix:
    keep = [j for j in range(A.cols) if j not in set(cols)]
    return TropMatrix(A.semifield, A.entries[:, keep])
