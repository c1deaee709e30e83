from App.models import INTEGER
from .EmbeddingSpec import EmbeddingSpec
from .words import Component


class DiagonalPairEmbedding(EmbeddingSpec):
    # two 1x1 blocks counting the letters of each component
    name = "P1"
    description = "sg(a) x sg(c) into upper-triangular 2x2 natural matrices"
    components = (Component("sg", ("a",)), Component("sg", ("c",)))
    kind = INTEGER
    size = 2

    def images(self):
        return {
            "a": [[2, 0], [0, 1]],
            "c": [[1, 0], [0, 2]],
        }
