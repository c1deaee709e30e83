from App.models import INTEGER
from .EmbeddingSpec import EmbeddingSpec
from .words import Component


class ClassicalEmbedding(EmbeddingSpec):
    """Sanov's pair: the free group of rank 2 inside SL(2, Z)."""

    name = "E1"
    description = "fg(a, b) into 2x2 integer matrices via [[1,2],[0,1]] and [[1,0],[2,1]]"
    components = (Component("fg", ("a", "b")),)
    kind = INTEGER
    size = 2

    def images(self):
        return {
            "a": [[1, 2], [0, 1]],
            "b": [[1, 0], [2, 1]],
        }

    def inverse_images(self):
        return {
            "a": [[1, -2], [0, 1]],
            "b": [[1, 0], [-2, 1]],
        }
