from .EmbeddingSpec import EmbeddingSpec
from .words import AlphabetReduction, Component


class AlphabetReductionEmbedding(EmbeddingSpec):
    """sg({a1..ak}) through a_i -> a b^i a into the codomain of a binary embedding."""

    def __init__(self, base, k):
        if not base.components or len(base.components[0].alphabet) < 2:
            raise ValueError(f"{base.name} has no binary first component to reduce onto")
        self.base = base
        self.reduction = AlphabetReduction(k)
        self.name = f"{base.name}/k{k}"
        self.description = f"sg over {k} letters composed with {base.name}"
        self.components = (Component("sg", self.reduction.alphabet),)
        self.kind = base.kind
        self.size = base.size

    def images(self):
        a, b = self.base.components[0].alphabet[:2]
        composed = self.reduction.images_from(self.base.image(a), self.base.image(b))
        return {symbol: matrix.rows for symbol, matrix in composed.items()}
