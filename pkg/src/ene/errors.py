"""Exception types raised across the package."""


class EneError(Exception):
    """Base class for all errors raised by :mod:`ene`."""


class RingMismatch(EneError, TypeError):
    """Operands live in different rings."""


class NotQAlgebra(EneError):
    """An operation needs exact division by integers and the ring lacks it."""

    def __init__(self, ring, operation=None):
        self.ring = ring
        self.operation = operation
        where = f" in {operation}" if operation else ""
        super().__init__(f"ring {ring} is not a Q-algebra{where}")


class NotUnitSeries(EneError, ValueError):
    """A series was expected to have constant coefficient 1."""


class NotInvertibleCoefficient(EneError, ArithmeticError):
    """An exponential coefficient is zero or a zero divisor.

    ``index`` is the first failing index ``i`` (1-based).
    """

    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(f"exponential coefficient F_{index} = {value} is not invertible")


class IntegralityViolation(EneError, AssertionError):
    """A generated universal polynomial has a non-integer coefficient."""


class NonConvergence(EneError, RuntimeError):
    """The root finder exhausted its iteration budget."""


class QCapExceeded(EneError, ValueError):
    """Requested universal polynomial index is above the configured cap."""
