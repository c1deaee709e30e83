import re

from App.models import Block, RingId, WordRep, WordSyntaxError

_POWER = re.compile(r"^([ATUL])(?:\^(-?\d+))?$")


def format_word(word):
    """`[sign] [L^e] T^p0 U^q0 ( A T^p U^q )*`, e.g. `- L^1 T^3 U^-2 A T^0 U^1`."""
    parts = ["+" if word.sl_sign == 1 else "-"]
    if word.epsilon:
        parts.append(f"L^{word.epsilon}")
    parts += [f"T^{word.p0}", f"U^{word.q0}"]
    for block in word.blocks:
        parts += ["A", f"T^{block.p}", f"U^{block.q}"]
    return " ".join(parts)


def _power(token, symbol):
    match = _POWER.match(token)
    if not match or match.group(1) != symbol or match.group(2) is None:
        raise WordSyntaxError(f"Expected {symbol}^<integer>, got {token!r}")
    return int(match.group(2))


def parse_word(ring, text):
    ring = ring if isinstance(ring, RingId) else RingId(ring)
    tokens = text.split()
    sl_sign = 1
    if tokens and tokens[0] in ("+", "-"):
        sl_sign = 1 if tokens.pop(0) == "+" else -1
    epsilon = 0
    if tokens and tokens[0].startswith("L"):
        epsilon = _power(tokens.pop(0), "L")
    if len(tokens) < 2:
        raise WordSyntaxError(f"Word needs a head T^p0 U^q0: {text!r}")
    p0 = _power(tokens.pop(0), "T")
    q0 = _power(tokens.pop(0), "U")
    if len(tokens) % 3:
        raise WordSyntaxError(f"Trailing tokens do not form A T^p U^q blocks: {' '.join(tokens)!r}")
    blocks = []
    for i in range(0, len(tokens), 3):
        if tokens[i] != "A":
            raise WordSyntaxError(f"Expected A to open a block, got {tokens[i]!r}")
        blocks.append(Block(_power(tokens[i + 1], "T"), _power(tokens[i + 2], "U")))
    try:
        return WordRep(ring=ring, epsilon=epsilon, p0=p0, q0=q0, blocks=tuple(blocks), sl_sign=sl_sign)
    except ValueError as e:
        raise WordSyntaxError(str(e))


def format_tokens(tokens):
    if not tokens:
        return "Id"
    return " ".join(symbol if exp == 1 else f"{symbol}^{exp}" for symbol, exp in tokens)


def parse_tokens(text):
    if text.strip() == "Id":
        return []
    tokens = []
    for token in text.split():
        match = _POWER.match(token)
        if not match:
            raise WordSyntaxError(f"Bad generator token {token!r}")
        tokens.append((match.group(1), int(match.group(2) or 1)))
    return tokens
