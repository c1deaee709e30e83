from fractions import Fraction

from App.models import INTEGER, RATIONAL
from .EmbeddingSpec import EmbeddingSpec
from .words import Component


class ScalarCounterEmbedding(EmbeddingSpec):
    """
    The rank-2 free group on [[1,2],[0,1]] and [[1,0],[2,1]] next to the scalar 2*Id,
    whose determinant 4^n counts the c letters. With c invertible the scalars are rational.
    """

    size = 2

    def __init__(self, name, counter_kind):
        self.name = name
        counter = Component(counter_kind, ("c",))
        self.components = (Component("fg", ("a", "b")), counter)
        self.kind = RATIONAL if counter.is_group else INTEGER
        self.description = f"fg(a, b) x {counter} into 2x2 {self.kind.name} matrices, c -> 2 Id"

    def images(self):
        return {
            "a": [[1, 2], [0, 1]],
            "b": [[1, 0], [2, 1]],
            "c": [[2, 0], [0, 2]],
        }

    def inverse_images(self):
        inverses = {
            "a": [[1, -2], [0, 1]],
            "b": [[1, 0], [-2, 1]],
        }
        if self.components[1].is_group:
            half = Fraction(1, 2)
            inverses["c"] = [[half, 0], [0, half]]
        return inverses
