"""
Kernel method end-forms as exact truncated power series.

The small kernel root u_1 is a Laurent series starting at 1/z, so everything
is expressed through utilde = z*u_1, a power series with constant term 1:

  kernel  -u^2 + z u^3 + 2zu - u^2 z^2 - u z^3 - z^4 (+ t z^4 when marking)
  u = utilde/z, times z^2:
          utilde^3 - utilde^2 (1+z^2) + utilde (2z^2 - z^4) - z^6 (+ t z^6)

  g0 = z^2/utilde
  h0 = (1 - z^2 - utilde)/utilde
  k0 = z^2 (1 - z^2 - utilde) / (utilde (utilde - z^2))                 unmarked
     = (1 - z^2 - utilde)(t utilde - t z^2 + z^2) / (utilde (utilde + t z^2 - z^2))
  level k:  (1 - utilde) z^(k-2) / utilde^k
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from automaton.layers import Layer
from series.algebraic import AlgEquation, residual, solve_algebraic
from series.equations import TRANSFORMED_U_CUBIC
from series.exceptions import DivisionByNonUnit
from series.rings import RATIONALS, TPOLYS, T, TPoly
from series.zseries import ZSeries

logger = logging.getLogger(__name__)


class KernelMode(Enum):
    UNIVARIATE = 'univariate'
    BIVARIATE = 'bivariate'

    @property
    def ring(self):
        return TPOLYS if self is KernelMode.BIVARIATE else RATIONALS


# c * z^a * u^b, keyed by (a, b)
KERNEL_TERMS = {
    (0, 2): -1,
    (1, 3): 1,
    (1, 1): 2,
    (2, 2): -1,
    (3, 1): -1,
    (4, 0): -1,
}


def kernel_polynomial(mode):
    """The kernel as {(power of z, power of u): coefficient}"""
    mode = KernelMode(mode)
    terms = {key: mode.ring.coerce(c) for key, c in KERNEL_TERMS.items()}
    if mode is KernelMode.BIVARIATE:
        terms[4, 0] = terms[4, 0] + T
    return terms


def kernel_equation(mode):
    """Substitute u = utilde/z into the kernel and clear denominators with z^2"""
    mode = KernelMode(mode)
    terms = {}
    for (a, b), c in kernel_polynomial(mode).items():
        shift = a - b + 2
        if shift < 0:
            raise ValueError(f'z^{a} u^{b} leaves a negative power of z')
        terms[b, shift] = c
    return AlgEquation.from_terms(terms, mode.ring, f'kernel-{mode.value}')


# The same equation written out by hand
TRANSFORMED_KERNEL = {
    KernelMode.UNIVARIATE: AlgEquation.from_terms({
        (3, 0): 1, (2, 0): -1, (2, 2): -1, (1, 2): 2, (1, 4): -1, (0, 6): -1,
    }, RATIONALS, 'kernel-univariate'),
    KernelMode.BIVARIATE: AlgEquation.from_terms({
        (3, 0): 1, (2, 0): -1, (2, 2): -1, (1, 2): 2, (1, 4): -1, (0, 6): TPoly((-1, 1)),
    }, TPOLYS, 'kernel-bivariate'),
}


@dataclass(frozen=True)
class KernelRoot:
    utilde: ZSeries
    mode: KernelMode

    def u1_terms(self):
        """Nonzero Laurent terms of u_1 = utilde/z as (power of z, coefficient)"""
        return [(power - 1, c) for power, c in enumerate(self.utilde.coeffs) if c]


@lru_cache(maxsize=64)
def kernel_root(order, mode=KernelMode.UNIVARIATE):
    """The branch of the kernel with utilde(0) = 1 (a simple root)"""
    mode = KernelMode(mode)
    if order < 2:
        raise ValueError('kernel root needs order >= 2')
    utilde = solve_algebraic(kernel_equation(mode), 1, order)
    logger.debug(f'Kernel root ({mode.value}) to order {order}')
    return KernelRoot(utilde, mode)


def kernel_residual(utilde, mode):
    """z^2 * kernel(utilde/z, z), term by term; vanishes for the true root"""
    mode = KernelMode(mode)
    order = utilde.order
    total = ZSeries.zero(order, mode.ring)
    for (a, b), c in kernel_polynomial(mode).items():
        total = total + (utilde ** b).scale(c).shift(a - b + 2).truncate(order)
    return total


@dataclass(frozen=True)
class BoundaryConstants:
    g0: ZSeries
    h0: ZSeries
    k0: ZSeries

    def total(self):
        """1 + g0 + h0 + k0"""
        return self.g0 + self.h0 + self.k0 + 1


def _root_series(order, mode, utilde):
    if utilde is None:
        return kernel_root(order, mode).utilde
    if utilde.order < order:
        raise ValueError(f'root known to order {utilde.order}, {order} requested')
    return utilde.truncate(order)


def boundary_constants(order, mode=KernelMode.UNIVARIATE, utilde=None):
    """g0, h0, k0 from the cancelled forms, evaluated at u = 0"""
    mode = KernelMode(mode)
    ring = mode.ring
    u = _root_series(order, mode, utilde)
    z2 = ZSeries.monomial(2, order, ring)
    gap = 1 - z2 - u

    g0 = z2.div(u)
    h0 = gap.div(u)
    if mode is KernelMode.BIVARIATE:
        t = ring.coerce(T)
        k0 = (gap * (u * t - z2 * t + z2)).div(u * (u + z2 * t - z2))
    else:
        k0 = (z2 * gap).div(u * (u - z2))
    return BoundaryConstants(g0, h0, k0)


def level_gf(k, order, mode=KernelMode.UNIVARIATE):
    """Paths ending at level k: (1 - utilde) z^(k-2) / utilde^k, mod z^order"""
    mode = KernelMode(mode)
    if k < 0:
        raise ValueError('level must be nonnegative')
    if order < k + 2:
        raise ValueError(f'order {order} is below k + 2 = {k + 2}')
    work = order + k + 2
    ring = mode.ring
    u = kernel_root(work, mode).utilde
    base = (1 - u).div(ZSeries.monomial(2, work, ring))
    return base.shift(k).div(u ** k).truncate(order)


def layer_gf(layer, k, order, mode=KernelMode.UNIVARIATE):
    """Level-k series of one layer, read off the cancelled F, G, H, K forms"""
    mode = KernelMode(mode)
    layer = Layer(layer)
    ring = mode.ring
    u = kernel_root(order, mode).utilde
    constants = boundary_constants(order, mode)
    z2 = ZSeries.monomial(2, order, ring)
    weight = {
        Layer.F: 1 - z2 - z2 * (constants.g0 + constants.h0 + constants.k0),
        Layer.G: z2,
        Layer.H: z2 * (constants.g0 + constants.h0 + constants.k0),
        Layer.K: z2 * (constants.g0.scale(ring.coerce(T) if mode is KernelMode.BIVARIATE else 0)
                       + constants.h0 + constants.k0),
    }[layer]
    return weight.shift(k).div(u ** (k + 1)).truncate(order)


def check_identity_total(order, mode=KernelMode.UNIVARIATE, utilde=None):
    """1 + g0 + h0 + k0 == (1 - utilde)/z^2 coefficient by coefficient"""
    mode = KernelMode(mode)
    work = order + 2 if utilde is None else utilde.order
    u = _root_series(work, mode, utilde)
    lhs = boundary_constants(work, mode, u).total()
    try:
        rhs = (1 - u).div(ZSeries.monomial(2, work, mode.ring))
    except DivisionByNonUnit as e:
        logger.warning(f'Level-0 form is not a power series: {e}')
        return False
    n = min(lhs.order, rhs.order)
    return lhs.truncate(n) == rhs.truncate(n)


def level_zero_half_length(order, mode=KernelMode.UNIVARIATE):
    """level_gf(0) with z^2 -> z, the first ``order`` half-length coefficients"""
    return level_gf(0, 2 * order - 1 if order > 1 else 2, mode).compress(2).truncate(order)


def transformation_chain_residual(order):
    """Residual of 2ZU^2 - U - Z^2U^3 + 1 - Z^2U^2 + Z^2U - Z - Z^2 at U = (1 - z u_1)/z^2"""
    return residual(TRANSFORMED_U_CUBIC, level_zero_half_length(order))
