from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Tuple

from App.models.errors import ShapeMismatchError
from App.models.ring import QuadRat, RingId


@dataclass(frozen=True)
class ScalarKind:
    name: str
    zero: Any
    one: Any
    encode: Callable[[Any], Any]


def _encode_rational(value):
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _encode_gaussian(value):
    return value.get_json()


GAUSSIAN = RingId(1)

INTEGER = ScalarKind("integer", 0, 1, str)
RATIONAL = ScalarKind("rational", Fraction(0), Fraction(1), _encode_rational)
GAUSSIAN_RATIONAL = ScalarKind(
    "gaussian_rational", QuadRat(GAUSSIAN, 0, 0), QuadRat(GAUSSIAN, 1, 0), _encode_gaussian
)


@dataclass(frozen=True)
class SquareMatrix:
    """Exact n x n matrix over one scalar kind (big integers, rationals or Q(i))."""

    kind: ScalarKind
    rows: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ShapeMismatchError("Matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, kind, rows):
        return cls(kind, tuple(tuple(_lift(kind, e) for e in row) for row in rows))

    @classmethod
    def identity(cls, kind, n):
        return cls(kind, tuple(tuple(kind.one if i == j else kind.zero for j in range(n)) for i in range(n)))

    @property
    def size(self):
        return len(self.rows)

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if other.size != self.size or other.kind != self.kind:
            raise ShapeMismatchError(
                f"Cannot multiply {self.size}x{self.size} {self.kind.name} by "
                f"{other.size}x{other.size} {other.kind.name}"
            )
        columns = list(zip(*other.rows))
        zero = self.kind.zero
        return SquareMatrix(
            self.kind,
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), zero) for col in columns)
                for row in self.rows
            ),
        )

    def det(self):
        return _laplace(self.rows, self.kind.zero)

    def key(self):
        """Canonical hashable form: the serialised entries."""
        return (self.kind.name,) + tuple(_freeze(self.kind.encode(e)) for row in self.rows for e in row)

    def get_json(self):
        return {
            "kind": self.kind.name,
            "entries": [[self.kind.encode(e) for e in row] for row in self.rows],
        }

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "]"


def _lift(kind, value):
    if kind.name == RATIONAL.name:
        return Fraction(value)
    if kind.name == GAUSSIAN_RATIONAL.name and not isinstance(value, QuadRat):
        return QuadRat(GAUSSIAN, Fraction(value), 0)
    return value


def _freeze(encoded):
    return tuple(encoded) if isinstance(encoded, list) else encoded


def _laplace(rows, zero):
    if len(rows) == 1:
        return rows[0][0]
    total = zero
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = entry * _laplace(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total
