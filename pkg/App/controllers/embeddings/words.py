from dataclasses import dataclass
from itertools import product
from typing import Tuple

from App.models import (
    FgWord,
    NotInvertibleError,
    SgWord,
    ShapeMismatchError,
    WordSyntaxError,
)

FREE_GROUP = "fg"
FREE_SEMIGROUP = "sg"


@dataclass(frozen=True)
class Component:
    """One factor of a product domain: fg(alphabet) or sg(alphabet)."""

    kind: str
    alphabet: Tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (FREE_GROUP, FREE_SEMIGROUP):
            raise ValueError(f"Component kind must be fg or sg, got {self.kind!r}")
        object.__setattr__(self, "alphabet", tuple(self.alphabet))

    @property
    def is_group(self):
        return self.kind == FREE_GROUP

    def empty(self):
        return FgWord() if self.is_group else SgWord()

    def __str__(self):
        return f"{self.kind}({{{','.join(self.alphabet)}}})"


def reduce_word(letters):
    """Free reduction of raw (symbol, +1 | -1) pairs."""
    return FgWord.reduce(letters)


def parse_word_text(component, text):
    letters = []
    for char in "".join(text.split()):
        symbol = char.lower()
        if symbol not in component.alphabet:
            raise WordSyntaxError(f"Letter {char!r} is not in {component}")
        if char != symbol:
            if not component.is_group:
                raise NotInvertibleError(f"{symbol}^-1 does not exist in {component}")
            letters.append((symbol, -1))
        else:
            letters.append((symbol, 1))
    if component.is_group:
        return FgWord.reduce(letters)
    return SgWord(tuple(symbol for symbol, _ in letters))


def parse_element(components, text):
    """`a b A c | c C`: one `|`-separated field per component, uppercase for inverses."""
    fields = text.split("|")
    if len(fields) == len(components) + 1 and not fields[-1].strip():
        fields = fields[:-1]
    if len(fields) != len(components):
        raise ShapeMismatchError(
            f"Expected {len(components)} component(s) separated by '|', got {len(fields)}"
        )
    return tuple(parse_word_text(component, field) for component, field in zip(components, fields))


def format_element(element):
    return " | ".join(str(word) for word in element)


def multiply_elements(left, right):
    return tuple(u * v for u, v in zip(left, right))


def _reduced_extensions(alphabet, word, extra):
    """Reduced words of length len(word) + extra that start with word."""
    if extra == 0:
        yield word
        return
    signed = [(symbol, exp) for symbol in alphabet for exp in (1, -1)]
    for shorter in _reduced_extensions(alphabet, word, extra - 1):
        for letter in signed:
            if shorter.letters and shorter.letters[-1] == (letter[0], -letter[1]):
                continue
            yield FgWord(shorter.letters + (letter,))


def enumerate_component(component, max_len):
    """All reduced (fg) or plain (sg) words of length <= max_len, shortest first."""
    for length in range(max_len + 1):
        if component.is_group:
            yield from _reduced_extensions(component.alphabet, FgWord(), length)
        else:
            for letters in product(component.alphabet, repeat=length):
                yield SgWord(letters)


def enumerate_shard(component, max_len, first):
    """Words of length <= max_len starting with first, a (symbol, exp) pair; just the empty word for None."""
    if first is None:
        yield component.empty()
        return
    symbol, _ = first
    for length in range(1, max_len + 1):
        if component.is_group:
            yield from _reduced_extensions(component.alphabet, FgWord((first,)), length - 1)
        else:
            for letters in product(component.alphabet, repeat=length - 1):
                yield SgWord((symbol,) + letters)


def count_words(component, length):
    k = len(component.alphabet)
    if length == 0:
        return 1
    if component.is_group:
        return 2 * k * (2 * k - 1) ** (length - 1)
    return k ** length


def count_component(component, max_len):
    return sum(count_words(component, length) for length in range(max_len + 1))


def count_elements(components, max_len):
    total = 1
    for component in components:
        total *= count_component(component, max_len)
    return total


class AlphabetReduction:
    """The morphism sg({a1..ak}) -> sg({a, b}) sending a_i to a b^i a."""

    def __init__(self, k):
        if k < 1:
            raise ValueError(f"Alphabet size must be at least 1, got {k}")
        self.k = k
        self.alphabet = tuple(f"a{i}" for i in range(1, k + 1))

    def letter_image(self, i):
        return ("a",) + ("b",) * i + ("a",)

    def encode(self, word):
        letters = []
        for symbol in word.letters:
            if symbol not in self.alphabet:
                raise WordSyntaxError(f"Letter {symbol!r} is not in {{{','.join(self.alphabet)}}}")
            letters += self.letter_image(int(symbol[1:]))
        return SgWord(tuple(letters))

    def decode(self, word):
        letters = word.letters
        decoded = []
        pos = 0
        while pos < len(letters):
            if letters[pos] != "a":
                raise WordSyntaxError(f"Expected 'a' at position {pos} of {word}")
            end = pos + 1
            while end < len(letters) and letters[end] == "b":
                end += 1
            i = end - pos - 1
            if end >= len(letters) or not 1 <= i <= self.k:
                raise WordSyntaxError(f"{word} is not the image of a word over {self.k} letters")
            decoded.append(f"a{i}")
            pos = end + 1
        return SgWord(tuple(decoded))

    def images_from(self, image_a, image_b):
        """Generator images of sg({a1..ak}) from the images of a and b under a binary embedding."""
        images = {}
        power = image_b
        for i in range(1, self.k + 1):
            images[f"a{i}"] = image_a @ power @ image_a
            power = power @ image_b
        return images
