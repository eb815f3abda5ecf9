"""Idempotent semifields over the extended reals.

Four instances are provided::

    MAX_PLUS   R u {-inf}   zero=-inf  one=0  (max, +)
    MIN_PLUS   R u {+inf}   zero=+inf  one=0  (min, +)
    MAX_TIMES  R+ u {0}     zero=0     one=1  (max, *)
    MIN_TIMES  R+ u {+inf}  zero=+inf  one=1  (min, *)

Each :class:`Semifield` member carries array-level primitives (``add``,
``mul``, ``inv``, ...) that work elementwise on floats and numpy arrays; the
matrix code in :mod:`tropsched.linalg` is built on those.  Scalars that must
remember their semifield are wrapped in :class:`SemifieldValue`.
"""

from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, SemifieldMismatchError


class Semifield(enum.Enum):
    MAX_PLUS = "max-plus"
    MIN_PLUS = "min-plus"
    MAX_TIMES = "max-times"
    MIN_TIMES = "min-times"

    @classmethod
    def coerce(cls, kind) -> "Semifield":
        """Accept a member, its value string or its name (case-insensitive)."""
        if isinstance(kind, cls):
            return kind
        if isinstance(kind, str):
            key = kind.strip().lower().replace("_", "-")
            for member in cls:
                if member.value == key:
                    return member
        raise ValueError(f"unknown semifield {kind!r}")

    @property
    def is_additive(self) -> bool:
        """True when multiplication is conventional addition."""
        return self in (Semifield.MAX_PLUS, Semifield.MIN_PLUS)

    @property
    def is_max(self) -> bool:
        return self in (Semifield.MAX_PLUS, Semifield.MAX_TIMES)

    @property
    def zero(self) -> float:
        return _ZERO[self]

    @property
    def one(self) -> float:
        return 0.0 if self.is_additive else 1.0

    # --- elementwise primitives -------------------------------------------

    def add(self, a, b):
        return np.maximum(a, b) if self.is_max else np.minimum(a, b)

    def mul(self, a, b):
        # zero is absorbing without special cases: -inf + x, inf + x, 0 * x
        # and inf * x (x > 0) all stay zero for the carriers admitted here.
        return np.add(a, b) if self.is_additive else np.multiply(a, b)

    def inv(self, a):
        """Multiplicative inverse of nonzero entries; zero entries map to zero."""
        a = np.asarray(a, dtype=float)
        out = np.full(a.shape, self.zero)
        nz = a != self.zero
        out[nz] = -a[nz] if self.is_additive else 1.0 / a[nz]
        return out if out.shape else float(out)

    def leq(self, a, b):
        return np.less_equal(a, b) if self.is_max else np.greater_equal(a, b)

    def lt(self, a, b):
        return np.less(a, b) if self.is_max else np.greater(a, b)

    def sum(self, a, axis=None):
        """Tropical sum (reduction by addition) along ``axis``."""
        a = np.asarray(a, dtype=float)
        return np.max(a, axis=axis) if self.is_max else np.min(a, axis=axis)

    def power(self, a: float, p) -> float:
        a = float(a)
        if isinstance(p, numbers.Integral) or (isinstance(p, float) and p.is_integer()):
            p = int(p)
        elif self is not Semifield.MAX_PLUS:
            raise DomainError(f"real exponents are only defined for max-plus, got {p!r}")
        if a == self.zero:
            if p > 0:
                return self.zero
            raise DomainError(f"zero raised to non-positive power {p}")
        if p == 0:
            return self.one
        if self.is_additive:
            return a * p
        return a**p

    # --- carrier checks ---------------------------------------------------

    def check(self, a):
        """Validate that every entry of ``a`` belongs to the carrier set."""
        arr = np.asarray(a, dtype=float)
        if np.isnan(arr).any():
            raise DomainError("NaN is not an element of any semifield")
        if self is Semifield.MAX_PLUS:
            bad = arr == np.inf
        elif self is Semifield.MIN_PLUS:
            bad = arr == -np.inf
        elif self is Semifield.MAX_TIMES:
            bad = (arr < 0) | np.isinf(arr)
        else:
            bad = arr <= 0
        if bad.any():
            culprit = arr[bad].flat[0]
            raise DomainError(f"{culprit!r} is not an element of {self.value}")
        return arr


_ZERO = {
    Semifield.MAX_PLUS: -math.inf,
    Semifield.MIN_PLUS: math.inf,
    Semifield.MAX_TIMES: 0.0,
    Semifield.MIN_TIMES: math.inf,
}

MAX_PLUS = Semifield.MAX_PLUS
MIN_PLUS = Semifield.MIN_PLUS
MAX_TIMES = Semifield.MAX_TIMES
MIN_TIMES = Semifield.MIN_TIMES


@dataclass(frozen=True)
class SemifieldValue:
    """A scalar tagged with its semifield.

    ``a + b`` is the tropical sum and ``a * b`` the tropical product; ``<=``
    is the order induced by addition.  Comparing with a plain number with
    ``==`` compares the underlying value.
    """

    semifield: Semifield
    value: float

    def __post_init__(self):
        kind = Semifield.coerce(self.semifield)
        object.__setattr__(self, "semifield", kind)
        object.__setattr__(self, "value", float(kind.check(self.value)))

    @classmethod
    def zero(cls, semifield) -> "SemifieldValue":
        kind = Semifield.coerce(semifield)
        return cls(kind, kind.zero)

    @classmethod
    def one(cls, semifield) -> "SemifieldValue":
        kind = Semifield.coerce(semifield)
        return cls(kind, kind.one)

    @property
    def is_zero(self) -> bool:
        return self.value == self.semifield.zero

    def _same(self, other) -> Semifield:
        if not isinstance(other, SemifieldValue):
            raise SemifieldMismatchError(f"expected SemifieldValue, got {type(other).__name__}")
        if other.semifield is not self.semifield:
            raise SemifieldMismatchError(
                f"cannot combine {self.semifield.value} with {other.semifield.value}"
            )
        return self.semifield

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, p):
        return power(self, p)

    def __le__(self, other):
        return leq(self, other)

    def __lt__(self, other):
        kind = self._same(other)
        return bool(kind.lt(self.value, other.value))

    def __ge__(self, other):
        return leq(other, self)

    def __gt__(self, other):
        return other < self

    def __eq__(self, other):
        if isinstance(other, SemifieldValue):
            return self.semifield is other.semifield and self.value == other.value
        if isinstance(other, numbers.Real):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"SemifieldValue({self.semifield.value}, {self.value!r})"


def add(a: SemifieldValue, b: SemifieldValue) -> SemifieldValue:
    kind = a._same(b)
    return SemifieldValue(kind, float(kind.add(a.value, b.value)))


def mul(a: SemifieldValue, b: SemifieldValue) -> SemifieldValue:
    kind = a._same(b)
    return SemifieldValue(kind, float(kind.mul(a.value, b.value)))


def inv(a: SemifieldValue) -> SemifieldValue:
    if a.is_zero:
        raise DomainError("zero has no multiplicative inverse")
    return SemifieldValue(a.semifield, a.semifield.inv(a.value))


def power(a: SemifieldValue, p) -> SemifieldValue:
    """Integer power; real exponents are accepted for max-plus only."""
    return SemifieldValue(a.semifield, a.semifield.power(a.value, p))


def leq(a: SemifieldValue, b: SemifieldValue) -> bool:
    kind = a._same(b)
    return bool(kind.leq(a.value, b.value))
