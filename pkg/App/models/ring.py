import re
from dataclasses import dataclass
from fractions import Fraction

from App.models.errors import InvalidRingError, MalformedMatrixError, RingMismatchError

EUCLIDEAN_DISCRIMINANTS = (1, 2, 3, 7, 11)

DECIMAL = re.compile(r"[+-]?[0-9]+")


def parse_integer(value):
    """An exact integer from JSON: an int or a decimal string, never a float or bool."""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str) and DECIMAL.fullmatch(value):
        return int(value)
    raise MalformedMatrixError(f"Expected an integer or a decimal string, got {value!r}")


@dataclass(frozen=True)
class RingId:
    """The ring of integers O_d of Q(sqrt(-d)) for a Euclidean d."""

    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise InvalidRingError(f"d must be an integer, got {self.d!r}")
        if self.d not in EUCLIDEAN_DISCRIMINANTS:
            raise InvalidRingError(
                f"O_{self.d} is not Euclidean. Allowed: {list(EUCLIDEAN_DISCRIMINANTS)}"
            )

    @property
    def half_integral(self):
        # omega = (1 + sqrt(-d)) / 2 exactly when -d = 1 (mod 4)
        return self.d in (3, 7, 11)

    @property
    def omega_square(self):
        if self.half_integral:
            return (-(1 + self.d) // 4, 1)
        return (-self.d, 0)

    @property
    def omega_description(self):
        if self.half_integral:
            return f"(1+sqrt(-{self.d}))/2"
        return f"sqrt(-{self.d})"

    def __call__(self, x=0, y=0):
        return QuadInt(self, x, y)

    def zero(self):
        return QuadInt(self, 0, 0)

    def one(self):
        return QuadInt(self, 1, 0)

    def omega(self):
        return QuadInt(self, 0, 1)

    def get_json(self):
        return {"d": self.d, "omega": self.omega_description}


def _check_same_ring(left, right):
    if left.ring != right.ring:
        raise RingMismatchError(f"Cannot combine elements of O_{left.ring.d} and O_{right.ring.d}")


def _norm_form(ring, x, y):
    if ring.half_integral:
        return x * x + x * y + y * y * ((1 + ring.d) // 4)
    return x * x + ring.d * y * y


@dataclass(frozen=True)
class QuadInt:
    """x + y*omega in O_d, with arbitrary-precision integer coordinates."""

    ring: RingId
    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.ring, RingId):
            object.__setattr__(self, "ring", RingId(self.ring))
        object.__setattr__(self, "x", int(self.x))
        object.__setattr__(self, "y", int(self.y))

    @property
    def coords(self):
        return (self.x, self.y)

    @property
    def norm(self):
        return _norm_form(self.ring, self.x, self.y)

    def conjugate(self):
        if self.ring.half_integral:
            # omega + conj(omega) = 1
            return QuadInt(self.ring, self.x + self.y, -self.y)
        return QuadInt(self.ring, self.x, -self.y)

    def is_unit(self):
        return self.norm == 1

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            _check_same_ring(self, other)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QuadInt(self.ring, other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.ring, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.ring, self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QuadInt(self.ring, -self.x, -self.y)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c0, c1 = self.ring.omega_square
        yy = self.y * other.y
        return QuadInt(
            self.ring,
            self.x * other.x + c0 * yy,
            self.x * other.y + self.y * other.x + c1 * yy,
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def to_rational(self):
        return QuadRat(self.ring, Fraction(self.x), Fraction(self.y))

    def get_json(self):
        return [str(self.x), str(self.y)]

    @classmethod
    def from_json(cls, ring, data):
        x, y = data
        return cls(ring, parse_integer(x), parse_integer(y))

    def __str__(self):
        return _format_coords(self.x, self.y)

    def __repr__(self):
        return f"QuadInt(d={self.ring.d}, {self})"


@dataclass(frozen=True)
class QuadRat:
    """x + y*omega in Q(sqrt(-d)), with exact rational coordinates."""

    ring: RingId
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if not isinstance(self.ring, RingId):
            object.__setattr__(self, "ring", RingId(self.ring))
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @property
    def coords(self):
        return (self.x, self.y)

    @property
    def norm(self):
        return _norm_form(self.ring, self.x, self.y)

    def conjugate(self):
        if self.ring.half_integral:
            return QuadRat(self.ring, self.x + self.y, -self.y)
        return QuadRat(self.ring, self.x, -self.y)

    def _coerce(self, other):
        if isinstance(other, QuadRat):
            _check_same_ring(self, other)
            return other
        if isinstance(other, QuadInt):
            _check_same_ring(self, other)
            return other.to_rational()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadRat(self.ring, Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.ring, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.ring, self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QuadRat(self.ring, -self.x, -self.y)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c0, c1 = self.ring.omega_square
        yy = self.y * other.y
        return QuadRat(
            self.ring,
            self.x * other.x + c0 * yy,
            self.x * other.y + self.y * other.x + c1 * yy,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm
        if n == 0:
            raise ZeroDivisionError(f"division of {self} by zero in Q(sqrt(-{self.ring.d}))")
        num = self * other.conjugate()
        return QuadRat(self.ring, num.x / n, num.y / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __eq__(self, other):
        if isinstance(other, QuadInt):
            other = other.to_rational()
        if not isinstance(other, QuadRat):
            return NotImplemented
        return self.ring == other.ring and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.ring, self.x, self.y))

    def get_json(self):
        return [
            str(self.x.numerator),
            str(self.x.denominator),
            str(self.y.numerator),
            str(self.y.denominator),
        ]

    def __str__(self):
        return _format_coords(self.x, self.y)

    def __repr__(self):
        return f"QuadRat(d={self.ring.d}, {self})"


def _format_coords(x, y):
    if not y:
        return str(x)
    y_part = "ω" if y == 1 else "-ω" if y == -1 else f"{y}ω"
    if not x:
        return y_part
    if y_part.startswith("-"):
        return f"{x} - {y_part[1:]}"
    return f"{x} + {y_part}"
