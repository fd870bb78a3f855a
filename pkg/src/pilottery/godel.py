"""Word coding and the rank function over the set of coded words.

A nonempty word maps to the natural number whose base-(B+1) digits are the
1-based alphabet indices of its glyphs. No digit is ever zero, so the image
is exactly the zero-free base-(B+1) naturals; that set is decidable by a
digit scan, and the 1-based position of a member in increasing order has a
closed form: read the same digit string as a bijective base-B numeral.
"""

from __future__ import annotations

from .alphabet import ALPHABET, Alphabet
from .errors import NotInGamma

BASE = ALPHABET.size + 1  # 17


def encode(word: str, alphabet: Alphabet = ALPHABET) -> int:
    """Godel number of a nonempty word."""
    if not word:
        raise ValueError("cannot encode the empty word")
    base = alphabet.size + 1
    value = 0
    index = alphabet.index
    for glyph in word:
        value = value * base + index(glyph)
    return value


def code_digits(code: int, base: int = BASE) -> list[int]:
    """Base-`base` digits of code, most significant first.

    Raises NotInGamma when code < 1 or any digit is zero.
    """
    if code < 1:
        raise NotInGamma(f"{code} is not a word code")
    digits = []
    while code:
        code, d = divmod(code, base)
        if d == 0:
            raise NotInGamma("zero digit in base-%d expansion" % base)
        digits.append(d)
    digits.reverse()
    return digits


def decode(code: int, alphabet: Alphabet = ALPHABET) -> str:
    """Inverse of encode; raises NotInGamma off the image."""
    glyph = alphabet.glyph
    return "".join(glyph(d) for d in code_digits(code, alphabet.size + 1))


def in_gamma(code: int) -> bool:
    """True iff code is the Godel number of some nonempty word."""
    if code < 1:
        return False
    while code:
        code, d = divmod(code, BASE)
        if d == 0:
            return False
    return True


def rank(code: int) -> int:
    """1-based position of code among word codes in increasing order.

    Closed form: the digit string of code, each digit in 1..B, read as a
    bijective base-B numeral.
    """
    b = BASE - 1
    value = 0
    for d in code_digits(code):
        value = value * b + d
    return value


def word_length_of_code(code: int) -> int:
    """Glyph count of decode(code) without materializing the word."""
    return len(code_digits(code))


def code_length_bound(max_word_length: int) -> int:
    """Largest code of any word with at most the given glyph count."""
    if max_word_length < 1:
        raise ValueError("word length must be >= 1")
    return encode_max(max_word_length)


def encode_max(length: int) -> int:
    """Code of the length-`length` word using only the last glyph."""
    b = ALPHABET.size
    return sum(b * BASE ** i for i in range(length))
