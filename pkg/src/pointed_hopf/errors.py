"""Exception types shared across the package."""


class PointedHopfError(Exception):
    """Base class for all errors raised by this package."""


class NonInvertible(PointedHopfError, ArithmeticError):
    """A matrix over Z/lZ has a determinant that is not a unit."""


class DivisionByZero(PointedHopfError, ZeroDivisionError):
    """Inversion of the zero element of a cyclotomic field."""


class PreconditionFailed(PointedHopfError, ValueError):
    """An operation was called outside the parameter range where it is defined.

    ``flag`` names the failed condition (e.g. ``"double_ok"``).
    """

    def __init__(self, message: str, flag: str | None = None):
        super().__init__(message)
        self.flag = flag


class TooLarge(PointedHopfError, ValueError):
    """An exhaustive enumeration would exceed its configured cap."""


class NoSuchR(PointedHopfError, ValueError):
    """No r >= 0 solves beta(w') = theta^(2(c - r)) (only possible for even l)."""


class NotSimple(PointedHopfError, ValueError):
    """``identify_simple`` was called on a module that is not simple."""
