"""Exception hierarchy shared by the algebra, solvers and CLI."""


class TropicalError(Exception):
    """Base class for every error raised by :mod:`tropsched`."""


class SemifieldMismatchError(TropicalError, TypeError):
    """Operands live in different semifields."""


class ShapeError(TropicalError, ValueError):
    """Matrix or vector dimensions do not agree."""


class DomainError(TropicalError, ValueError):
    """An operation is undefined for its argument (e.g. inverting zero)."""


class PreconditionError(TropicalError, ValueError):
    """A solver hypothesis does not hold.

    ``hypothesis`` names the failed condition (``"row_regular"``,
    ``"column_regular"``, ``"nonzero"``, ``"regular"``), ``operand`` names the
    argument and ``index`` points at the offending row, column or entry when
    there is one.
    """

    def __init__(self, message, *, hypothesis, operand=None, index=None):
        super().__init__(message)
        self.hypothesis = hypothesis
        self.operand = operand
        self.index = index


class InfeasibleError(TropicalError):
    """``A x <= x`` has no regular solution because ``Tr(A) > 1``.

    ``cycle_length`` is the smallest k with ``tr(A^k) > 1``, i.e. the length of
    the shortest circuit of positive weight in the max-plus reading.
    """

    def __init__(self, message, *, tr_value, cycle_length=None):
        super().__init__(message)
        self.tr_value = tr_value
        self.cycle_length = cycle_length
