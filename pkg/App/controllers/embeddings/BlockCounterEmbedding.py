from App.models import INTEGER
from .EmbeddingSpec import EmbeddingSpec
from .words import Component


class BlockCounterEmbedding(EmbeddingSpec):
    """
    sg(a, b) acts on coordinates {1, 3} through [[2,0],[0,1]] and [[2,1],[0,1]];
    c = Id + 2 E_23 counts signed c letters in the (2,3) entry.
    """

    name = "P3"
    description = "sg(a, b) x fg(c) into 3x3 integer matrices"
    components = (Component("sg", ("a", "b")), Component("fg", ("c",)))
    kind = INTEGER
    size = 3

    def images(self):
        return {
            "a": [[2, 0, 0], [0, 1, 0], [0, 0, 1]],
            "b": [[2, 0, 1], [0, 1, 0], [0, 0, 1]],
            "c": [[1, 0, 0], [0, 1, 2], [0, 0, 1]],
        }

    def inverse_images(self):
        return {
            "c": [[1, 0, 0], [0, 1, -2], [0, 0, 1]],
        }

    @staticmethod
    def printed_images():
        # b with its off-diagonal 1 at (1, 2) shares coordinate 2 with c, so b and c do not commute
        return {
            "a": [[2, 0, 0], [0, 1, 0], [0, 0, 1]],
            "b": [[2, 1, 0], [0, 1, 0], [0, 0, 1]],
            "c": [[1, 0, 0], [0, 1, 2], [0, 0, 1]],
        }
