"""The fixed, versioned alphabet underlying the word coding.

The glyph order is a declared convention: changing it changes every code,
so the table is frozen as a package asset and regression-tested. Variables
are spelled with the base glyph ``x`` followed by primes, keeping the
alphabet finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

_GLYPHS_V1 = ("O", "S", "+", "·", "=", "(", ")", "¬", "→",
              "∧", "∨", "∀", "∃", "x", "′", ",")

_NAMES_V1 = ("zero", "successor", "plus", "times", "equals", "lparen",
             "rparen", "not", "implies", "and", "or", "forall", "exists",
             "var-base", "prime", "comma")


@dataclass(frozen=True)
class Alphabet:
    """Ordered glyph table; index() is 1-based as the coding requires."""

    version: str
    symbols: tuple[str, ...]
    _index: dict = field(repr=False, hash=False, compare=False, default=None)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet glyphs must be distinct")
        object.__setattr__(
            self, "_index", {g: i + 1 for i, g in enumerate(self.symbols)}
        )

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, glyph: str) -> int:
        """1-based index of a glyph; KeyError for foreign characters."""
        return self._index[glyph]

    def glyph(self, index: int) -> str:
        """Glyph at 1-based index."""
        if not 1 <= index <= len(self.symbols):
            raise IndexError(f"glyph index {index} out of range")
        return self.symbols[index - 1]

    def contains(self, glyph: str) -> bool:
        return glyph in self._index

    def validate_word(self, word: str) -> None:
        if not word:
            raise ValueError("empty word")
        for pos, ch in enumerate(word):
            if ch not in self._index:
                raise ValueError(f"glyph {ch!r} at {pos} not in alphabet")

    def asset_text(self) -> str:
        lines = [f"# pilottery alphabet {self.version}"]
        lines += [
            f"{i + 1}\t{_NAMES_V1[i]}\tU+{ord(g):04X}\t{g}"
            for i, g in enumerate(self.symbols)
        ]
        return "\n".join(lines) + "\n"


ALPHABET = Alphabet("v1", _GLYPHS_V1)

# Single-glyph constants used by the grammar.
ZERO, SUCC, PLUS, TIMES, EQUALS = _GLYPHS_V1[0:5]
LPAREN, RPAREN, NOT, IMPLIES = _GLYPHS_V1[5:9]
AND, OR, FORALL, EXISTS = _GLYPHS_V1[9:13]
VAR_BASE, PRIME, COMMA = _GLYPHS_V1[13:16]


def load_asset() -> Alphabet:
    """Rebuild the alphabet from the shipped text asset (bit-stability check)."""
    text = resources.files("pilottery").joinpath("_data/alphabet-v1.txt").read_text(
        encoding="utf-8"
    )
    glyphs = []
    version = None
    for line in text.splitlines():
        if line.startswith("#"):
            version = line.split()[-1]
            continue
        if not line.strip():
            continue
        idx, _name, codepoint, glyph = line.split("\t")
        expected = chr(int(codepoint[2:], 16))
        if glyph != expected:
            raise ValueError(f"asset row {idx}: glyph/codepoint mismatch")
        glyphs.append(glyph)
    return Alphabet(version or "v1", tuple(glyphs))
