from skew_dyck.exceptions import SkewDyckError


class RingMismatch(SkewDyckError):
    """Operands carry coefficients from different rings"""


class DivisionByNonUnit(SkewDyckError):
    """Divisor is not invertible, even after stripping a common power of z"""


class NotARoot(SkewDyckError):
    """Starting value does not solve the equation at z = 0"""


class SingularRoot(SkewDyckError):
    """Derivative at the starting value is not a unit, Newton cannot lift it"""
