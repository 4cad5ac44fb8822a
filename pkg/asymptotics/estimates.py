"""
Square-root singularity of the avoidance series and the coefficient estimate

  [z^n] S ~ sqrt(2 + 8 sqrt(3)/9) / (2 sqrt(pi)) * (2 + 3 sqrt(3)/2)^n * n^(-3/2)

Everything is evaluated with mpmath at WORKING_DPS digits so that growth^n never overflows.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp

from holonomic.recurrence import INITIAL_TERMS, extend
from series.equations import A128729
from skew_dyck.exceptions import SkewDyckError

logger = logging.getLogger(__name__)

WORKING_DPS = 40
# process-global; shared by the verify worker threads
mp.mp.dps = WORKING_DPS

AGREEMENT = mp.mpf('1e-12')
BRACKET = (mp.mpf('0.1'), mp.mpf('0.3'))
LEADING_DIGITS = 20


class MissingCoefficient(SkewDyckError):
    """A report row asks for a coefficient beyond the ones supplied"""

    def __init__(self, n, available):
        self.n = n
        self.available = available
        super().__init__(f'no exact coefficient for n={n}, only s_0..s_{available - 1} known')


def _evaluate(rows, z, s):
    """Numeric value of sum_i rows[i](z) s^i"""
    total = mp.mpf(0)
    for i, poly in enumerate(rows):
        total += mp.polyval(list(reversed([mp.mpf(c) for c in poly])), z) * s ** i
    return total


def critical_value(z, eq=A128729):
    """The branch of dP/dS = 0 through (z0, S0); dP/dS is quadratic in S"""
    rows = eq.derivative().coefficients
    c, b, a = (mp.polyval(list(reversed([mp.mpf(x) for x in poly])), z) for poly in rows)
    return (-b - mp.sqrt(b * b - 4 * a * c)) / (2 * a)


def singular_point(eq=A128729):
    """z0 by bisection of P(z, S_crit(z)) on [0.1, 0.3]"""
    z0 = mp.findroot(lambda z: _evaluate(eq.coefficients, z, critical_value(z, eq)),
                     BRACKET, solver='bisect', tol=mp.mpf('1e-28'), maxsteps=200)
    logger.debug(f'Bisection z0 = {mp.nstr(z0, 15)}')
    return z0


def local_coefficient_from_equation(z0, s0, eq=A128729):
    """c with z - z0 ~ c (S - S0)^2, i.e. -P_SS / (2 P_z) at the singular point"""
    second = eq.derivative().derivative()
    p_ss = _evaluate(second.coefficients, z0, s0)
    dz_rows = [tuple(j * c for j, c in enumerate(poly))[1:] or (0,) for poly in eq.coefficients]
    p_z = _evaluate(dz_rows, z0, s0)
    return -p_ss / (2 * p_z)


@dataclass(frozen=True)
class AsymptoticConstants:
    z0: mp.mpf
    S0: mp.mpf
    amplitude: mp.mpf
    growth: mp.mpf
    local_coefficient: mp.mpf

    def log_estimate(self, n):
        return mp.log(self.amplitude) + n * mp.log(self.growth) - mp.mpf(3) / 2 * mp.log(n)


@lru_cache(maxsize=1)
def constants():
    """Closed forms, cross-checked against the numeric singular point"""
    sqrt3 = mp.sqrt(3)
    result = AsymptoticConstants(
        z0=mp.mpf(2) / 11 * (3 * sqrt3 - 4),
        S0=1 + sqrt3 / 2,
        amplitude=mp.sqrt(2 + 8 * sqrt3 / 9) / (2 * mp.sqrt(mp.pi)),
        growth=2 + mp.mpf(3) / 2 * sqrt3,
        local_coefficient=(216 - 129 * sqrt3) / 121,
    )
    numeric = singular_point()
    if abs(numeric - result.z0) > AGREEMENT:
        raise AssertionError(f'bisection z0 {numeric} disagrees with closed form {result.z0}')
    return result


def estimate(n, consts=None):
    """amplitude * growth^n * n^(-3/2), evaluated through logarithms"""
    if n < 1:
        raise ValueError('n must be at least 1')
    consts = consts or constants()
    return mp.exp(consts.log_estimate(n))


def log_magnitude(value):
    """Natural log of a positive big integer from its digit count and leading digits"""
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise ValueError(f'{value!r} is not a positive integer')
    digits = str(value)
    lead = digits[:LEADING_DIGITS]
    return mp.log(int(lead)) + (len(digits) - len(lead)) * mp.log(10)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    coefficient: int
    estimate: mp.mpf
    ratio: mp.mpf

    @property
    def deviation(self):
        return abs(self.ratio - 1)


DEFAULT_N_VALUES = (50, 100, 200, 400, 800, 1600)


def convergence_report(n_values=DEFAULT_N_VALUES, coefficients=None):
    """
    (n, s_n, estimate, ratio) rows in the order given. Coefficients default to
    the recurrence run from 1, 1, 2, 6 up to the largest n requested.
    """
    n_values = list(n_values)
    if not n_values:
        return []
    if coefficients is None:
        coefficients = extend(INITIAL_TERMS, max(max(n_values), 3))
    consts = constants()
    rows = []
    for n in n_values:
        if n < 1:
            raise ValueError('n must be at least 1')
        if n >= len(coefficients):
            raise MissingCoefficient(n, len(coefficients))
        s_n = coefficients[n]
        log_est = consts.log_estimate(n)
        ratio = mp.exp(log_magnitude(s_n) - log_est)
        rows.append(ConvergenceRow(n, s_n, mp.exp(log_est), ratio))
    logger.info(f'Convergence report for {len(rows)} values of n')
    return rows
