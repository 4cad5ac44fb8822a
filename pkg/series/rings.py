"""
Exact coefficient rings: rationals and polynomials in the marker t.

Integers are kept as plain ``int`` wherever a rational happens to be integral,
so the common all-integer case never pays for ``Fraction`` arithmetic.
"""
from fractions import Fraction
from numbers import Rational

from .exceptions import RingMismatch


def normalize(value):
    """Return ``value`` as an int when integral, else as a Fraction"""
    if isinstance(value, bool):
        raise TypeError('booleans are not ring elements')
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f'not an exact rational: {value!r}')


def exact_str(value):
    """Decimal string for an int, 'p/q' for a non-integral rational"""
    value = normalize(value)
    return str(value)


def parse_exact(text):
    return normalize(Fraction(str(text).strip()))


class TPoly:
    """
    Polynomial in the marker t with exact coefficients, index = power of t.

    Canonical form never stores a trailing zero, so the zero polynomial
    has no coefficients and degree -1.
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        values = [normalize(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, 'coeffs', tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError('TPoly is immutable')

    @classmethod
    def lift(cls, value):
        if isinstance(value, TPoly):
            return value
        return cls((value,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, power):
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == TPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(('TPoly', self.coeffs))

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('negative powers of t are not polynomials')
        result, base = TPoly((1,)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, t):
        """Horner evaluation at an exact rational t"""
        t = normalize(t)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return normalize(acc)

    def total(self):
        return normalize(sum(self.coeffs))

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self):
        return [exact_str(c) for c in self.coeffs] or ['0']

    @classmethod
    def from_json(cls, values):
        return cls(parse_exact(v) for v in values)

    def __repr__(self):
        return f'TPoly({list(self.coeffs)!r})'

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                factor = '' if c == 1 else f'{c}*'
                terms.append(f'{factor}t' if power == 1 else f'{factor}t^{power}')
        return ' + '.join(terms)


def _as_tpoly(value):
    if isinstance(value, TPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return TPoly((value,))
    return None


T = TPoly((0, 1))


class CoefficientRing:
    """Exact ring the coefficients of a ZSeries are drawn from"""
    name = ''

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def is_unit(self, value):
        raise NotImplementedError

    def inverse(self, value):
        raise NotImplementedError

    def to_json(self, value):
        raise NotImplementedError

    def from_json(self, value):
        raise NotImplementedError

    def __repr__(self):
        return f'<{self.name}>'


class RationalRing(CoefficientRing):
    name = 'QQ'

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, TPoly):
            if value.degree > 0:
                raise RingMismatch(f'{value} is not a rational constant')
            return value.constant
        return normalize(value)

    def is_unit(self, value):
        return value != 0

    def inverse(self, value):
        return normalize(Fraction(1) / Fraction(value))

    def to_json(self, value):
        return exact_str(value)

    def from_json(self, value):
        return parse_exact(value)


class TPolyRing(CoefficientRing):
    name = 'QQ[t]'

    def zero(self):
        return TPoly()

    def one(self):
        return TPoly((1,))

    def coerce(self, value):
        return TPoly.lift(normalize(value) if not isinstance(value, TPoly) else value)

    def is_unit(self, value):
        return value.degree == 0

    def inverse(self, value):
        if value.degree != 0:
            raise ZeroDivisionError(f'{value} is not a unit of QQ[t]')
        return TPoly((normalize(Fraction(1) / Fraction(value.constant)),))

    def to_json(self, value):
        return value.to_json()

    def from_json(self, value):
        return TPoly.from_json(value)


RATIONALS = RationalRing()
TPOLYS = TPolyRing()
