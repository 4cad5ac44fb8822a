"""
P-recurrence and differential equation satisfied by the half-length
avoidance series S(z) = 1 + z + 2z^2 + 6z^3 + 20z^4 + ...

  sum_i p_i(n) s_(n+i) = 0 with
    p0 = -44n(n+1)           p1 = -2(n+1)(10n-7)
    p2 = 3(115+106n+23n^2)   p3 = -32(n+4)(n+3)
    p4 = 4(n+5)(n+4)

  a0 + a1 S + b1 S' + b2 S'' = 0 with
    a0 = 31z-8, a1 = -15z,
    b1 = -(2z-1)(44z^3+15z^2-48z+8), b2 = -z(11z^2+16z-4)(2z-1)^2
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from series.zseries import ZSeries
from skew_dyck.exceptions import SkewDyckError

logger = logging.getLogger(__name__)

INITIAL_TERMS = (1, 1, 2, 6)


class NonIntegralStep(SkewDyckError):
    """The recurrence asked for a division with a nonzero remainder"""

    def __init__(self, n, remainder, numerator, denominator):
        self.n = n
        self.remainder = remainder
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(
            f'step n={n}: {numerator}/{denominator} leaves remainder {remainder} '
            f'(s_{n + 4} would be {Fraction(numerator, denominator)})'
        )


@dataclass(frozen=True)
class PRecurrence:
    """Fourth-order recurrence with polynomial coefficients in n"""
    name: str = 'A128729'

    order = 4

    def coefficients(self, n):
        return (
            -44 * n * (n + 1),
            -2 * (n + 1) * (10 * n - 7),
            3 * (115 + 106 * n + 23 * n * n),
            -32 * (n + 4) * (n + 3),
            4 * (n + 5) * (n + 4),
        )

    def residual_at(self, seq, n):
        return sum(p * seq[n + i] for i, p in enumerate(self.coefficients(n)))


RECURRENCE = PRecurrence()


def _check_integer(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f'{value!r} is not an exact integer')
    return value


def extend(initial=INITIAL_TERMS, N=16, recurrence=RECURRENCE):
    """
    s_0..s_N from four initial terms, each new term by exact integer division.

    Raises NonIntegralStep at the first n whose division leaves a remainder.
    """
    if len(initial) != recurrence.order:
        raise ValueError(f'expected {recurrence.order} initial terms, got {len(initial)}')
    if N < recurrence.order - 1:
        raise ValueError(f'N must be at least {recurrence.order - 1}')
    seq = [_check_integer(s) for s in initial]
    for n in range(N - recurrence.order + 1):
        *lower, leading = recurrence.coefficients(n)
        numerator = -sum(p * seq[n + i] for i, p in enumerate(lower))
        quotient, remainder = divmod(numerator, leading)
        if remainder:
            raise NonIntegralStep(n, remainder, numerator, leading)
        seq.append(quotient)
    logger.debug(f'Recurrence extended to s_{N}')
    return seq


def recurrence_residual(seq, recurrence=RECURRENCE):
    """sum_i p_i(n) s_(n+i) for every n the sequence covers"""
    if len(seq) < recurrence.order + 1:
        raise ValueError(f'need at least {recurrence.order + 1} terms')
    return [recurrence.residual_at(seq, n) for n in range(len(seq) - recurrence.order)]


def first_failure(residuals):
    """Index of the first nonzero residual, None when all vanish"""
    return next((n for n, r in enumerate(residuals) if r), None)


def _multiply(*factors):
    product = (1,)
    for factor in factors:
        out = [0] * (len(product) + len(factor) - 1)
        for i, a in enumerate(product):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        product = tuple(out)
    return product


@dataclass(frozen=True)
class HolonomicODE:
    """Coefficient tuples are polynomials in z, lowest degree first"""
    a0: tuple = (-8, 31)
    a1: tuple = (0, -15)
    b1: tuple = _multiply((-1,), (-1, 2), (8, -48, 15, 44))
    b2: tuple = _multiply((0, -1), (-4, 16, 11), (-1, 2), (-1, 2))

    def apply(self, S):
        """a0 + a1 S + b1 S' + b2 S'', known mod z^(order-2)"""
        if S.order < 5:
            raise ValueError('series must have order at least 5')
        order = S.order - 2
        ring = S.ring

        def poly(coeffs):
            return ZSeries.polynomial(dict(enumerate(coeffs)), order, ring)

        first = S.derivative()
        second = first.derivative()
        return (
            poly(self.a0)
            + poly(self.a1) * S.truncate(order)
            + poly(self.b1) * first.truncate(order)
            + poly(self.b2) * second
        )


ODE = HolonomicODE()


def ode_residual(S, ode=ODE):
    return ode.apply(S)
