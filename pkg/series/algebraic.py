"""
Algebraic equations P(z, S) = sum c_i(z) S^i = 0 and their power series roots.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from .exceptions import NotARoot, SingularRoot
from .rings import RATIONALS
from .zseries import ZSeries

logger = logging.getLogger(__name__)

SOLVER_METHODS = ('newton', 'newton-linear', 'undetermined')


@dataclass(frozen=True)
class AlgEquation:
    """
    Polynomial in the unknown series S whose coefficients are exact
    polynomials in z (entries from ``ring``, so they may involve t).

    ``coefficients[i][j]`` is the coefficient of S^i z^j.
    """
    coefficients: tuple
    ring: object = RATIONALS
    name: str = ''

    def __post_init__(self):
        coefficients = tuple(
            tuple(self.ring.coerce(c) for c in poly) for poly in self.coefficients
        )
        if not coefficients or not any(coefficients[-1]):
            raise ValueError('leading coefficient c_d must not vanish identically')
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def from_terms(cls, terms, ring=RATIONALS, name=''):
        """Build from {(power of S, power of z): coefficient}"""
        degree = max(i for i, _ in terms)
        width = max(j for _, j in terms) + 1
        rows = [[ring.zero()] * width for _ in range(degree + 1)]
        for (i, j), c in terms.items():
            rows[i][j] = rows[i][j] + ring.coerce(c)
        return cls(tuple(tuple(row) for row in rows), ring, name)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def terms(self):
        return {
            (i, j): c
            for i, poly in enumerate(self.coefficients)
            for j, c in enumerate(poly)
            if c
        }

    def coefficient_series(self, i, order):
        return ZSeries(self.coefficients[i], self.ring, order)

    def derivative(self):
        """dP/dS as another equation (may have a vanishing top coefficient trimmed)"""
        rows = [
            tuple(k * c for c in self.coefficients[k])
            for k in range(1, self.degree + 1)
        ]
        return AlgEquation(tuple(rows), self.ring, f'd{self.name}/dS')

    def evaluate(self, series):
        """P(z, S) truncated to the order of S (Horner in S)"""
        order = series.order
        acc = self.coefficient_series(self.degree, order)
        for i in range(self.degree - 1, -1, -1):
            acc = acc * series + self.coefficient_series(i, order)
        return acc

    def at_origin(self, s0):
        """P(0, s0)"""
        acc = self.ring.zero()
        for poly in reversed(self.coefficients):
            acc = acc * s0 + poly[0]
        return acc

    def derivative_at_origin(self, s0):
        """dP/dS at (0, s0)"""
        return self.derivative().at_origin(s0)

    def __eq__(self, other):
        if not isinstance(other, AlgEquation):
            return NotImplemented
        return self.ring is other.ring and self.terms() == other.terms()

    def __hash__(self):
        return hash((self.ring.name, tuple(sorted(self.terms().items(), key=lambda kv: kv[0]))))


def residual(eq, series):
    """sum c_i(z) S^i, truncated; zero iff S solves eq to its order"""
    return eq.evaluate(series)


def solve_algebraic(eq, s0, order, method=None):
    """
    The unique power series root of ``eq`` with constant term ``s0``, mod z^order.

    ``method`` is 'newton' (order doubling), 'newton-linear' (one order per step)
    or 'undetermined' (coefficient by coefficient); defaults to
    settings.SKEW_SERIES_SOLVER.
    """
    method = method or getattr(settings, 'SKEW_SERIES_SOLVER', 'newton')
    if method not in SOLVER_METHODS:
        raise ValueError(f'unknown solver {method!r}, expected one of {SOLVER_METHODS}')
    ring = eq.ring
    s0 = ring.coerce(s0)

    if eq.at_origin(s0):
        raise NotARoot(f'{eq.name or "equation"} does not vanish at (0, {s0})')
    slope = eq.derivative_at_origin(s0)
    if not ring.is_unit(slope):
        raise SingularRoot(f'dP/dS = {slope} at (0, {s0}) is not a unit')
    if order <= 1:
        return ZSeries((s0,), ring, order)

    if method == 'undetermined':
        return _solve_undetermined(eq, s0, slope, order)

    derivative = eq.derivative()
    root = ZSeries((s0,), ring)
    precision = 1
    while precision < order:
        precision = min(2 * precision, order) if method == 'newton' else precision + 1
        root = root.extend(precision)
        correction = eq.evaluate(root).div(derivative.evaluate(root))
        root = root - correction
    logger.debug(f'Newton ({method}) solved {eq.name or "equation"} to order {order}')
    return root


def _solve_undetermined(eq, s0, slope, order):
    """Second, independent solver: fix one coefficient per step from the residual"""
    ring = eq.ring
    inverse = ring.inverse(slope)
    coeffs = [s0]
    for n in range(1, order):
        trial = ZSeries(coeffs, ring, n + 1)
        coeffs.append(-eq.evaluate(trial)[n] * inverse)
    logger.debug(f'Undetermined coefficients solved {eq.name or "equation"} to order {order}')
    return ZSeries(coeffs, ring)
