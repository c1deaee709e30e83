from dataclasses import dataclass

from App.models.errors import DeterminantError, MalformedMatrixError, RingMismatchError
from App.models.ring import QuadInt, RingId, parse_integer


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix [[a11, a12], [a21, a22]] over O_d (or over Q(sqrt(-d)))."""

    a11: QuadInt
    a12: QuadInt
    a21: QuadInt
    a22: QuadInt

    def __post_init__(self):
        rings = {entry.ring for entry in self.entries}
        if len(rings) != 1:
            raise RingMismatchError("All matrix entries must lie in the same ring")

    @classmethod
    def from_coords(cls, ring, rows):
        """Build from [[(x, y), (x, y)], [(x, y), (x, y)]]."""
        if not isinstance(ring, RingId):
            ring = RingId(ring)
        (e11, e12), (e21, e22) = rows
        return cls(QuadInt(ring, *e11), QuadInt(ring, *e12), QuadInt(ring, *e21), QuadInt(ring, *e22))

    @classmethod
    def identity(cls, ring):
        return cls(ring.one(), ring.zero(), ring.zero(), ring.one())

    @property
    def ring(self):
        return self.a11.ring

    @property
    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    @property
    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def norm_max(self):
        return max(entry.norm for entry in self.entries)

    def sort_key(self):
        return tuple(c for entry in self.entries for c in entry.coords)

    def __matmul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError(f"Cannot multiply matrices over O_{self.ring.d} and O_{other.ring.d}")
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self):
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def scale(self, scalar):
        return Mat2(*(scalar * entry for entry in self.entries))

    def get_json(self):
        return {
            "d": self.ring.d,
            "entries": [[e.get_json() for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data, ring=None):
        try:
            d = data.get("d", ring.d if ring is not None else None)
            rows = data["entries"]
        except (AttributeError, KeyError, TypeError):
            raise MalformedMatrixError("Matrix JSON needs an 'entries' field and a ring")
        if d is None:
            raise MalformedMatrixError("Matrix JSON carries no ring and none was given")
        d = parse_integer(d)
        if ring is not None and ring.d != d:
            raise RingMismatchError(f"Matrix is over O_{d} but O_{ring.d} was requested")
        ring = RingId(d)
        try:
            (e11, e12), (e21, e22) = rows
            return cls(*(QuadInt.from_json(ring, e) for e in (e11, e12, e21, e22)))
        except (TypeError, ValueError) as e:
            raise MalformedMatrixError(f"Bad matrix entries: {e}")

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


@dataclass(frozen=True)
class PslElement:
    """m = ±M, stored through a sign-normalised representative."""

    rep: Mat2

    def __post_init__(self):
        if self.rep.det != self.rep.ring.one():
            raise DeterminantError(f"PSL elements need determinant 1, got {self.rep.det}")
        negated = -self.rep
        if negated.sort_key() > self.rep.sort_key():
            object.__setattr__(self, "rep", negated)

    @property
    def ring(self):
        return self.rep.ring

    def get_json(self):
        return self.rep.get_json()
