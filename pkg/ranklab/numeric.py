"""
Exact rational scalars.

Every value flowing through the library is a :class:`Scalar`, a thin immutable wrapper over
:class:`fractions.Fraction`. Arithmetic and ordering go through a small set of methods
(``compare``, ``+``, ``-``, ``*``, ``/``, ``abs``) which call ``_charge`` before doing the work;
plain scalars charge nothing, the instrumented subclass in :mod:`ranklab.costmodel` tallies.
"""
import re
import typing as th
from fractions import Fraction

__all__ = [
    'Scalar', 'ScalarParseError', 'INFINITY', 'parse_scalar', 'add', 'sub', 'mul', 'div', 'compare',
    'format_scalar', 'LESS', 'EQUAL', 'GREATER',
]

LESS, EQUAL, GREATER = -1, 0, 1

_INTEGER = re.compile(r'^[+-]?[0-9]+$')
_DECIMAL = re.compile(r'^[+-]?[0-9]+\.[0-9]+$')
_RATIO = re.compile(r'^([+-]?[0-9]+)/([0-9]+)$')


class ScalarParseError(ValueError):
    def __init__(self, token: str, reason: str = 'malformed scalar'):
        super().__init__(f'{reason}: {token!r}')
        self.token = token


class Scalar:
    """Exact rational number kept in canonical form (positive denominator, reduced)."""
    __slots__ = ('_value',)
    counted = False

    def __init__(self, value: th.Union[int, Fraction, 'Scalar'] = 0, denominator: th.Optional[int] = None):
        if isinstance(value, Scalar):
            value = value._value
        if isinstance(value, (float, complex)) or isinstance(denominator, float):
            raise TypeError('scalars are exact, floating point values are not accepted')
        if denominator is not None and denominator == 0:
            raise ZeroDivisionError('zero denominator')
        self._value = Fraction(value) if denominator is None else Fraction(value, denominator)

    # --- canonical fields ---
    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    @property
    def fraction(self) -> Fraction:
        return self._value

    def is_zero(self) -> bool:
        return self._value.numerator == 0

    def is_positive(self) -> bool:
        # reads the sign off the canonical numerator; used for domain checks, never charged
        return self._value.numerator > 0

    # --- instrumentation hooks ---
    def _charge(self, kind: str) -> None:
        pass

    def _make(self, value: Fraction) -> 'Scalar':
        return Scalar(value)

    def coerce(self, value: th.Union[int, Fraction, 'Scalar']) -> 'Scalar':
        """Lift a constant into the same execution context as ``self`` (uncharged)."""
        return self._make(Fraction(value.fraction if isinstance(value, Scalar) else value))

    def _binary(self, other, kind: str, fn) -> 'Scalar':
        other = other if isinstance(other, Scalar) else Scalar(other)
        owner = other if other.counted and not self.counted else self
        owner._charge(kind)
        return owner._make(fn(self._value, other._value))

    # --- arithmetic ---
    def __add__(self, other):
        return self._binary(other, 'additions', Fraction.__add__)

    def __radd__(self, other):
        return Scalar(other) + self

    def __sub__(self, other):
        return self._binary(other, 'additions', Fraction.__sub__)

    def __rsub__(self, other):
        return Scalar(other) - self

    def __mul__(self, other):
        return self._binary(other, 'multiplications', Fraction.__mul__)

    def __rmul__(self, other):
        return Scalar(other) * self

    def __truediv__(self, other):
        other = other if isinstance(other, Scalar) else Scalar(other)
        if other.is_zero():
            raise ZeroDivisionError('division by zero scalar')
        return self._binary(other, 'divisions', Fraction.__truediv__)

    def __neg__(self):
        self._charge('additions')
        return self._make(-self._value)

    def __abs__(self):
        # a sign test
        self._charge('comparisons')
        return self._make(abs(self._value))

    # --- ordering ---
    def compare(self, other) -> int:
        other = other if isinstance(other, Scalar) else Scalar(other)
        owner = other if other.counted and not self.counted else self
        owner._charge('comparisons')
        if self._value < other._value:
            return LESS
        return EQUAL if self._value == other._value else GREATER

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # structural equality, uncharged; algorithms branch through compare()
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._value == other._value
        if isinstance(other, (int, Fraction)):
            return self._value == other
        return NotImplemented

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f'Scalar({format_scalar(self)})'

    def __reduce__(self):
        return Scalar, (self.numerator, self.denominator)


class _Infinity:
    """Positive infinity sentinel for gap minima over empty gap sets."""
    __slots__ = ()

    def compare(self, other) -> int:
        return EQUAL if other is self else GREATER

    def __ge__(self, other):
        return True

    def __str__(self):
        return 'inf'

    def __repr__(self):
        return 'INFINITY'

    def __reduce__(self):
        return 'INFINITY'


INFINITY = _Infinity()


def parse_scalar(text: str) -> Scalar:
    """Parse ``-17``, ``3.25`` or ``p/q`` into an exact scalar; scientific notation is rejected."""
    if not isinstance(text, str):
        raise ScalarParseError(repr(text), 'scalar text must be a string')
    token = text.strip()
    if _INTEGER.match(token):
        return Scalar(int(token))
    if _DECIMAL.match(token):
        # Fraction parses decimal strings exactly, no binary float involved
        return Scalar(Fraction(token))
    match = _RATIO.match(token)
    if match:
        denominator = int(match.group(2))
        if denominator == 0:
            raise ScalarParseError(token, 'zero denominator')
        return Scalar(int(match.group(1)), denominator)
    raise ScalarParseError(token)


def format_scalar(value) -> str:
    """Exact text: ``p`` for integers, ``p/q`` otherwise, ``inf`` for the infinity sentinel."""
    if value is INFINITY:
        return 'inf'
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    return a / b


def compare(a: Scalar, b: Scalar) -> int:
    """Three-way exact comparison: ``LESS`` (-1), ``EQUAL`` (0) or ``GREATER`` (1)."""
    return a.compare(b)
