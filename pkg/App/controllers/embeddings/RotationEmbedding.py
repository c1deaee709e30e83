from fractions import Fraction

from App.models import GAUSSIAN_RATIONAL, QuadRat, RingId
from .EmbeddingSpec import EmbeddingSpec
from .words import Component

GAUSSIAN = RingId(1)


def _gaussian(x, y=0):
    return QuadRat(GAUSSIAN, Fraction(x), Fraction(y))


class RotationEmbedding(EmbeddingSpec):
    """Two rotations by the angle with cosine 3/5, one diagonalised over Q(i)."""

    name = "E2"
    description = "fg(a, b) into 2x2 matrices over Q(i) from the Pythagorean rotation 3/5 + 4/5 i"
    components = (Component("fg", ("a", "b")),)
    kind = GAUSSIAN_RATIONAL
    size = 2

    def images(self):
        c, s = Fraction(3, 5), Fraction(4, 5)
        return {
            "a": [[_gaussian(c, s), _gaussian(0)], [_gaussian(0), _gaussian(c, -s)]],
            "b": [[_gaussian(c), _gaussian(s)], [_gaussian(-s), _gaussian(c)]],
        }

    def inverse_images(self):
        c, s = Fraction(3, 5), Fraction(4, 5)
        return {
            "a": [[_gaussian(c, -s), _gaussian(0)], [_gaussian(0), _gaussian(c, s)]],
            "b": [[_gaussian(c), _gaussian(-s)], [_gaussian(s), _gaussian(c)]],
        }
