"""
Truncated formal power series in z with exact coefficients.

A ZSeries of order N is known modulo z^N: it stores exactly N coefficients.
Binary operations carry the smaller order of their operands, derivative
loses one order, division loses the valuation it strips.
"""
import logging

from .exceptions import DivisionByNonUnit, RingMismatch
from .rings import RATIONALS, TPOLYS, TPoly

logger = logging.getLogger(__name__)


class ZSeries:
    __slots__ = ('coeffs', 'ring')

    def __init__(self, coeffs=(), ring=RATIONALS, order=None):
        values = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError('order must be nonnegative')
            values = values[:order] + [ring.zero()] * (order - len(values))
        object.__setattr__(self, 'coeffs', tuple(values))
        object.__setattr__(self, 'ring', ring)

    def __setattr__(self, name, value):
        raise AttributeError('ZSeries is immutable')

    # Constructors

    @classmethod
    def zero(cls, order, ring=RATIONALS):
        return cls((), ring, order)

    @classmethod
    def one(cls, order, ring=RATIONALS):
        return cls.constant(1, order, ring)

    @classmethod
    def constant(cls, value, order, ring=RATIONALS):
        return cls((value,), ring, order) if order else cls((), ring, 0)

    @classmethod
    def monomial(cls, power, order, ring=RATIONALS, coefficient=1):
        """coefficient * z^power, known mod z^order"""
        coeffs = [0] * power + [coefficient]
        return cls(coeffs, ring, order)

    @classmethod
    def polynomial(cls, terms, order, ring=RATIONALS):
        """Build from {power: coefficient}"""
        coeffs = [ring.zero()] * order
        for power, c in terms.items():
            if power < order:
                coeffs[power] = coeffs[power] + ring.coerce(c)
        return cls(coeffs, ring)

    # Introspection

    @property
    def order(self):
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, power):
        if isinstance(power, slice):
            return list(self.coeffs[power])
        if power < 0 or power >= len(self.coeffs):
            raise IndexError(f'z^{power} is beyond the known order {self.order}')
        return self.coeffs[power]

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or the order when none is known"""
        for power, c in enumerate(self.coeffs):
            if c:
                return power
        return self.order

    def is_zero(self):
        return not any(self.coeffs)

    def is_integral(self):
        if self.ring is TPOLYS:
            return all(c.is_integral() for c in self.coeffs)
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f'ZSeries({list(self.coeffs)!r}, ring={self.ring.name}, order={self.order})'

    def __str__(self):
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            text = f'({c})' if isinstance(c, TPoly) and c.degree > 0 else str(c)
            if power == 0:
                terms.append(text)
            else:
                terms.append(f'{text}*z^{power}')
        return ' + '.join(terms or ['0']) + f' + O(z^{self.order})'

    # Truncation and reshaping

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f'cannot raise order {self.order} to {order} without data')
        return ZSeries(self.coeffs[:order], self.ring)

    def extend(self, order):
        """Pad with zeros; the caller vouches the padding is meant literally"""
        return ZSeries(self.coeffs, self.ring, max(order, self.order))

    def shift(self, k):
        """Multiply by z^k; the result is known to k more orders"""
        if k < 0:
            return self.div(ZSeries.monomial(-k, self.order, self.ring))
        return ZSeries([self.ring.zero()] * k + list(self.coeffs), self.ring)

    def compress(self, step=2, strict=True):
        """Keep every step-th coefficient (z^step -> z); strict rejects dropped nonzeros"""
        if strict:
            for power, c in enumerate(self.coeffs):
                if power % step and c:
                    raise ValueError(f'z^{power} is nonzero, series is not a function of z^{step}')
        return ZSeries(self.coeffs[::step], self.ring)

    def derivative(self):
        return ZSeries([k * c for k, c in enumerate(self.coeffs)][1:], self.ring)

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        return ZSeries([fn(c) for c in self.coeffs], ring)

    def evaluate_t(self, t):
        """Specialise a QQ[t] series at an exact value of t"""
        if self.ring is not TPOLYS:
            raise RingMismatch('only series over QQ[t] can be evaluated at t')
        return self.map_coefficients(lambda c: c.evaluate(t), RATIONALS)

    def lift(self):
        """View a rational series as a QQ[t] series"""
        if self.ring is TPOLYS:
            return self
        return self.map_coefficients(TPoly.lift, TPOLYS)

    # Arithmetic

    def _operand(self, other):
        if isinstance(other, ZSeries):
            if other.ring is not self.ring:
                raise RingMismatch(f'{self.ring.name} vs {other.ring.name}')
            return other
        return ZSeries.constant(self.ring.coerce(other), self.order, self.ring)

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs], self.ring)

    def __add__(self, other):
        other = self._operand(other)
        n = min(self.order, other.order)
        return ZSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._operand(other)
        n = min(self.order, other.order)
        return ZSeries([a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], self.ring)

    def __rsub__(self, other):
        return self._operand(other) - self

    def scale(self, value):
        value = self.ring.coerce(value)
        return ZSeries([value * c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            return self.scale(other)
        other = self._operand(other)
        n = min(self.order, other.order)
        zero = self.ring.zero()
        out = [zero] * n
        right = other.coeffs
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j in range(n - i):
                b = right[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return ZSeries(out, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        if exponent < 0:
            return ZSeries.one(self.order, self.ring).div(self ** -exponent)
        result, base = ZSeries.one(self.order, self.ring), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, ZSeries):
            return self.div(other)
        value = self.ring.coerce(other)
        if not self.ring.is_unit(value):
            raise DivisionByNonUnit(f'{value} is not a unit of {self.ring.name}')
        return self.scale(self.ring.inverse(value))

    def __rtruediv__(self, other):
        return self._operand(other).div(self)

    def div(self, other):
        """
        Exact quotient self / other.

        When other(0) is a unit the quotient is known to min(orders). Otherwise a
        common factor z^v is stripped from both (cancellation mode) and the
        quotient is known to min(orders) - v.
        """
        other = self._operand(other)
        if other.order and self.ring.is_unit(other.coeffs[0]):
            return self._div_unit(other)
        v = other.valuation()
        if v >= other.order:
            raise DivisionByNonUnit(f'divisor vanishes to its known order {other.order}')
        if not self.ring.is_unit(other.coeffs[v]):
            raise DivisionByNonUnit(f'leading coefficient {other.coeffs[v]} of z^{v} is not a unit')
        if self.valuation() < v:
            raise DivisionByNonUnit(
                f'dividend has valuation {self.valuation()} below the divisor valuation {v}'
            )
        logger.debug(f'Cancelling z^{v} before dividing')
        return ZSeries(self.coeffs[v:], self.ring)._div_unit(ZSeries(other.coeffs[v:], self.ring))

    def _div_unit(self, other):
        n = min(self.order, other.order)
        inv = self.ring.inverse(other.coeffs[0])
        b = other.coeffs
        out = []
        for k in range(n):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                if b[j]:
                    acc = acc - b[j] * out[k - j]
            out.append(acc * inv)
        return ZSeries(out, self.ring)

    # Serialization

    def to_json(self):
        return [self.ring.to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, values, ring=RATIONALS):
        return cls([ring.from_json(v) for v in values], ring)
