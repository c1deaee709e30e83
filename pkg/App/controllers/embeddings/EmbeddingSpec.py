from abc import ABC, abstractmethod

from App.models import FgWord, NotInvertibleError, SgWord, ShapeMismatchError, SquareMatrix
from .words import parse_element


class EmbeddingSpec(ABC):  # abstract class for the word (semi)group embeddings
    name = None
    description = ""
    components = ()
    kind = None
    size = 2

    @abstractmethod
    def images(self):
        """letter -> rows of the generator image"""
        pass

    def inverse_images(self):
        """letter -> rows of the inverse image, for group letters"""
        return {}

    def image(self, symbol, exp=1):
        if exp == 1:
            rows = self.images()[symbol]
        else:
            inverses = self.inverse_images()
            if symbol not in inverses:
                raise NotInvertibleError(f"{self.name}: {symbol} has no inverse image")
            rows = inverses[symbol]
        return SquareMatrix.of(self.kind, rows)

    def identity(self):
        return SquareMatrix.identity(self.kind, self.size)

    def group_letters(self):
        return [s for component in self.components if component.is_group for s in component.alphabet]

    def domain(self):
        return " x ".join(str(component) for component in self.components)

    def codomain(self):
        return f"{self.kind.name}^{self.size}x{self.size}"

    def parse(self, text):
        return parse_element(self.components, text)

    def _check_shape(self, element):
        if len(element) != len(self.components):
            raise ShapeMismatchError(
                f"{self.name} expects {len(self.components)} component(s), got {len(element)}"
            )
        for component, word in zip(self.components, element):
            expected = FgWord if component.is_group else SgWord
            if not isinstance(word, expected):
                raise ShapeMismatchError(f"{self.name}: expected a word of {component}, got {word!r}")

    def evaluate(self, element):
        """Product of the generator images, component by component, letter by letter."""
        self._check_shape(element)
        cache = {}
        result = self.identity()
        for component, word in zip(self.components, element):
            letters = word.letters if component.is_group else [(s, 1) for s in word.letters]
            for symbol, exp in letters:
                if symbol not in component.alphabet:
                    raise ShapeMismatchError(f"{self.name}: letter {symbol!r} is not in {component}")
                if (symbol, exp) not in cache:
                    cache[(symbol, exp)] = self.image(symbol, exp)
                result = result @ cache[(symbol, exp)]
        return result

    def evaluate_text(self, text):
        return self.evaluate(self.parse(text))

    def get_json(self):
        return {
            "name": self.name,
            "description": self.description,
            "domain": self.domain(),
            "codomain": self.codomain(),
        }
