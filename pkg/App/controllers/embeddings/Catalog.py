from App.models import UnknownEmbeddingError
from .ClassicalEmbedding import ClassicalEmbedding
from .RotationEmbedding import RotationEmbedding
from .DiagonalPairEmbedding import DiagonalPairEmbedding
from .ScalarCounterEmbedding import ScalarCounterEmbedding
from .BlockCounterEmbedding import BlockCounterEmbedding


class Catalog:
    def __init__(self):
        self.specs = {
            "E1": ClassicalEmbedding(),
            "E2": RotationEmbedding(),
            "P1": DiagonalPairEmbedding(),
            "P2": ScalarCounterEmbedding("P2", "fg"),
            "P3": BlockCounterEmbedding(),
            "P4": ScalarCounterEmbedding("P4", "sg"),
        }

    def get(self, name):
        spec = self.specs.get(name)
        if not spec:
            raise UnknownEmbeddingError(f"Unknown embedding: {name}. Available embeddings: {self.names()}")
        return spec

    def names(self):
        return list(self.specs.keys())


def catalog():
    return list(Catalog().specs.values())
