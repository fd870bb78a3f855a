"""Theory codes, inconsistency targets, and lottery-number recognition.

A theory is represented by the code of a formula A(x0, x1) whose free
variables are exactly x0 and x1: x0 carries a coded formula, x1 a witness.
The inconsistency target of such a code is the sentence obtained by
substituting the numeral of the coded contradiction for x0 and closing x1
existentially. A lottery number for the theory is the code of a valid
proof word whose conclusion is that target.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (MalformedProofWord, NotInGamma, ParseError,
                     UnsupportedFormula)
from .godel import decode, encode, in_gamma
from .kernel import StepCounter, check, conclusion, from_word
from .profiles import ZERO_EQ_ONE_CODE, AxiomProfile
from .syntax import (Add, And, Eq, Exists, Forall, Formula, Imp, Mul, Not,
                     Or, Succ, Term, Var, Zero, free_vars, numeral,
                     numeral_value, parse_formula, replace_term, substitute,
                     word_of)


@dataclass(frozen=True)
class TheoryCode:
    g: int
    formula: Formula

    @classmethod
    def from_code(cls, g: int) -> "TheoryCode":
        formula = _formula_in_g(g)
        if formula is None:
            raise ValueError(f"{g} is not the code of a two-variable formula")
        return cls(g, formula)

    @classmethod
    def from_formula(cls, formula: Formula) -> "TheoryCode":
        if free_vars(formula) != frozenset((0, 1)):
            raise ValueError("theory formulas need free variables exactly x0, x1")
        return cls(encode(word_of(formula)), formula)


def _formula_in_g(code: int) -> Optional[Formula]:
    if not in_gamma(code):
        return None
    try:
        formula = parse_formula(decode(code), strict=True)
    except ParseError:
        return None
    if free_vars(formula) != frozenset((0, 1)):
        return None
    return formula


def in_g(code: int) -> bool:
    """True iff code decodes to a formula with free variables exactly x0, x1."""
    return _formula_in_g(code) is not None


def inconsistency_target(tc: TheoryCode) -> Formula:
    """The sentence stating the represented theory proves the contradiction."""
    closed = substitute(tc.formula, 0, numeral(ZERO_EQ_ONE_CODE))
    sentence = Exists(1, closed)
    if free_vars(sentence):
        raise AssertionError("inconsistency target must be a sentence")
    return sentence


def is_lottery_number(p: int, tc: TheoryCode, profile: AxiomProfile,
                      counter: Optional[StepCounter] = None) -> bool:
    """True iff p codes a valid proof word concluding the target of tc."""
    if not in_gamma(p):
        return False
    try:
        proof = from_word(decode(p), profile, counter)
    except MalformedProofWord:
        return False
    if not check(proof, profile, counter):
        return False
    return proof.lines[-1] == inconsistency_target(tc)


def extract_theory(concl: Formula) -> Optional[TheoryCode]:
    """Recover the canonical theory code from a conclusion's shape.

    The conclusion must be an existential over x1 whose matrix contains the
    contradiction numeral; replacing every occurrence of that numeral by x0
    must yield a formula with free variables exactly {x0, x1}. Distinct
    theories can share one proof word (by replacing only some occurrences);
    the all-occurrences replacement is the canonical representative.
    """
    if not (isinstance(concl, Exists) and concl.var == 1):
        return None
    matrix = concl.body
    if free_vars(matrix) - {1}:
        return None
    candidate = replace_term(matrix, numeral(ZERO_EQ_ONE_CODE), Var(0))
    if free_vars(candidate) != frozenset((0, 1)):
        return None
    return TheoryCode.from_formula(candidate)


# ---------------------------------------------------------------------------
# Bounded provability evaluation
# ---------------------------------------------------------------------------

class Provable(Enum):
    PROVED = "proved"
    UNKNOWN = "unknown"


def _term_value(t: Term) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ):
        return t.count + _term_value(t.base)
    if isinstance(t, Add):
        return _term_value(t.left) + _term_value(t.right)
    if isinstance(t, Mul):
        return _term_value(t.left) * _term_value(t.right)
    if isinstance(t, Var):
        raise UnsupportedFormula(f"free variable x{t.index} under evaluation")
    raise UnsupportedFormula(f"unknown term {t!r}")


def _eval3(f: Formula, fuel: int) -> Optional[bool]:
    """Three-valued bounded truth: True/False are definite, None unknown.

    Quantifier witnesses range over numerals 0..fuel; an unexhausted
    universal can never report True, an unexhausted existential never
    False, so definite answers are sound for the standard model.
    """
    if isinstance(f, Eq):
        return _term_value(f.left) == _term_value(f.right)
    if isinstance(f, Not):
        inner = _eval3(f.body, fuel)
        return None if inner is None else not inner
    if isinstance(f, And):
        left, right = _eval3(f.left, fuel), _eval3(f.right, fuel)
        if left is False or right is False:
            return False
        if left is True and right is True:
            return True
        return None
    if isinstance(f, Or):
        left, right = _eval3(f.left, fuel), _eval3(f.right, fuel)
        if left is True or right is True:
            return True
        if left is False and right is False:
            return False
        return None
    if isinstance(f, Imp):
        left, right = _eval3(f.left, fuel), _eval3(f.right, fuel)
        if left is False or right is True:
            return True
        if left is True and right is False:
            return False
        return None
    if isinstance(f, Exists):
        for w in range(fuel + 1):
            if _eval3(substitute(f.body, f.var, numeral(w)), fuel) is True:
                return True
        return None
    if isinstance(f, Forall):
        for w in range(fuel + 1):
            v = _eval3(substitute(f.body, f.var, numeral(w)), fuel)
            if v is False:
                return False
        return None
    raise UnsupportedFormula(f"unknown formula {f!r}")


def eval_provable(tc: TheoryCode, b: Formula, fuel: int) -> Provable:
    """Bounded semi-decision of "the theory of tc proves b".

    Substitutes the code of b for x0 and tries witnesses 0..fuel for x1;
    sound only (never a false positive), complete for nothing.
    """
    coded = numeral(encode(word_of(b)))
    matrix = substitute(tc.formula, 0, coded)
    for w in range(fuel + 1):
        instance = substitute(matrix, 1, numeral(w))
        if free_vars(instance):
            raise UnsupportedFormula("instance still has free variables")
        if _eval3(instance, fuel) is True:
            return Provable.PROVED
    return Provable.UNKNOWN


# ---------------------------------------------------------------------------
# Theory registry files
# ---------------------------------------------------------------------------

def load_registry(text: str) -> dict[str, TheoryCode]:
    """Parse a registry: name<TAB>surface formula<TAB>expected code.

    The expected code is re-derived and must match; a mismatch means the
    file was written under a different alphabet version.
    """
    registry: dict[str, TheoryCode] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"registry line {lineno}: need 3 tab-separated fields")
        name, surface, expected = parts
        tc = TheoryCode.from_formula(parse_formula(surface))
        if tc.g != int(expected):
            raise ValueError(
                f"registry line {lineno}: code mismatch for {name!r} "
                f"(expected {expected}, derived {tc.g})"
            )
        registry[name] = tc
    return registry


def dump_registry(entries: dict[str, TheoryCode]) -> str:
    from .syntax import surface_of
    lines = ["# pilottery theory registry v1"]
    for name, tc in entries.items():
        lines.append(f"{name}\t{surface_of(tc.formula)}\t{tc.g}")
    return "\n".join(lines) + "\n"
