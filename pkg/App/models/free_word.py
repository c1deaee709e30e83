from dataclasses import dataclass, field
from typing import Tuple


def _free_reduce(letters):
    stack = []
    for symbol, exp in letters:
        if stack and stack[-1][0] == symbol and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((symbol, exp))
    return tuple(stack)


def _letter_text(symbol, exp):
    return symbol if exp == 1 else symbol.upper()


@dataclass(frozen=True)
class FgWord:
    """A reduced word of the free group: letters are (symbol, +1 | -1) pairs."""

    letters: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        letters = tuple((str(s), int(e)) for s, e in self.letters)
        for _, exp in letters:
            if exp not in (1, -1):
                raise ValueError(f"Letter exponents must be +1 or -1, got {exp}")
        if _free_reduce(letters) != letters:
            raise ValueError("FgWord letters must be reduced; use FgWord.reduce")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def reduce(cls, letters):
        return cls(_free_reduce((str(s), int(e)) for s, e in letters))

    def inverse(self):
        return FgWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def __mul__(self, other):
        if not isinstance(other, FgWord):
            return NotImplemented
        return FgWord.reduce(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(_letter_text(s, e) for s, e in self.letters) or "ε"

    def get_json(self):
        return str(self)


@dataclass(frozen=True)
class SgWord:
    """A word of the free semigroup (monoid, the empty word included)."""

    letters: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(str(s) for s in self.letters))

    def __mul__(self, other):
        if not isinstance(other, SgWord):
            return NotImplemented
        return SgWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(self.letters) or "ε"

    def get_json(self):
        return str(self)
