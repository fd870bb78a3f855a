"""Hilbert-style proof checking, and proofs as single words.

A proof is a sequence of formula lines, each justified as an axiom
instance of the active profile, by modus ponens from two earlier lines,
or by generalization of an earlier line. A proof travels as one word:
the line words joined by the glyph pair ``()``, which no well-formed
formula contains, so splitting is unambiguous. Words carry no
justification annotations; they are reconstructed by bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import MalformedProofWord, ParseError, PilotteryError
from .godel import encode
from .profiles import AxiomProfile
from .syntax import Forall, Formula, Imp, parse_formula, word_of

LINE_SHIFT = "()"


@dataclass(frozen=True)
class AxiomJust:
    name: str


@dataclass(frozen=True)
class MPJust:
    premise: int      # 0-based index of A
    implication: int  # 0-based index of A -> B


@dataclass(frozen=True)
class GenJust:
    premise: int
    var: int


Justification = Union[AxiomJust, MPJust, GenJust]


@dataclass(frozen=True)
class Proof:
    lines: tuple[Formula, ...]
    justifications: tuple[Optional[Justification], ...]

    def __post_init__(self):
        if len(self.lines) != len(self.justifications):
            raise ValueError("one justification slot per line required")


@dataclass(frozen=True)
class ProofWord:
    word: str


@dataclass(frozen=True)
class Verdict:
    valid: bool
    line: Optional[int] = None    # 1-based failing line
    reason: Optional[str] = None

    def __bool__(self):
        return self.valid


@dataclass
class StepCounter:
    """Counts elementary checking operations; used by the certificate
    checker to expose stage-level work."""

    steps: int = 0

    def tick(self, n: int = 1) -> None:
        self.steps += n


def _check_line(idx: int, lines: tuple[Formula, ...],
                just: Optional[Justification], profile: AxiomProfile,
                counter: Optional[StepCounter]) -> Optional[str]:
    """None if line idx is properly justified, else a reason string."""
    formula = lines[idx]
    if just is None:
        return "no justification found"
    if isinstance(just, AxiomJust):
        if counter:
            counter.tick()
        if profile.match_axiom(formula) != just.name:
            return f"not an instance of axiom {just.name}"
        return None
    if isinstance(just, MPJust):
        if counter:
            counter.tick()
        i, j = just.premise, just.implication
        if not (0 <= i < idx and 0 <= j < idx):
            return "modus ponens must cite earlier lines"
        imp = lines[j]
        if not (isinstance(imp, Imp) and imp.left == lines[i]
                and imp.right == formula):
            return "modus ponens premises do not match"
        return None
    if isinstance(just, GenJust):
        if counter:
            counter.tick()
        i = just.premise
        if not 0 <= i < idx:
            return "generalization must cite an earlier line"
        if formula != Forall(just.var, lines[i]):
            return "generalization premise does not match"
        return None
    return f"unknown justification {just!r}"


def check(proof: Proof, profile: AxiomProfile,
          counter: Optional[StepCounter] = None) -> Verdict:
    """Deterministic, total verdict on a proof against a profile."""
    if not proof.lines:
        return Verdict(False, None, "empty proof")
    for idx in range(len(proof.lines)):
        reason = _check_line(idx, proof.lines, proof.justifications[idx],
                             profile, counter)
        if reason is not None:
            return Verdict(False, idx + 1, reason)
    return Verdict(True)


def reconstruct(lines: tuple[Formula, ...], profile: AxiomProfile,
                counter: Optional[StepCounter] = None) -> Proof:
    """Search a justification for every line (axiom, then MP, then Gen).

    Lines with no justification get None; check() then reports them.
    """
    justs: list[Optional[Justification]] = []
    for idx, formula in enumerate(lines):
        just: Optional[Justification] = None
        if counter:
            counter.tick()
        name = profile.match_axiom(formula, counter)
        if name is not None:
            just = AxiomJust(name)
        if just is None:
            for j in range(idx):
                imp = lines[j]
                if counter:
                    counter.tick()
                if isinstance(imp, Imp) and imp.right == formula:
                    for i in range(idx):
                        if lines[i] == imp.left:
                            just = MPJust(i, j)
                            break
                if just is not None:
                    break
        if just is None and isinstance(formula, Forall):
            for i in range(idx):
                if counter:
                    counter.tick()
                if lines[i] == formula.body:
                    just = GenJust(i, formula.var)
                    break
        justs.append(just)
    return Proof(tuple(lines), tuple(justs))


def split_proof_word(word: str) -> list[str]:
    """Split a word on the ()-marker; segments must be nonempty."""
    segments = word.split(LINE_SHIFT)
    if any(not seg for seg in segments):
        raise MalformedProofWord("empty line segment in proof word")
    return segments


def to_word(proof: Proof) -> ProofWord:
    return ProofWord(LINE_SHIFT.join(word_of(line) for line in proof.lines))


def from_word(pw: ProofWord | str, profile: AxiomProfile,
              counter: Optional[StepCounter] = None) -> Proof:
    """Parse a proof word and reconstruct justifications.

    Raises MalformedProofWord when a segment fails to parse.
    """
    word = pw.word if isinstance(pw, ProofWord) else pw
    if not word:
        raise MalformedProofWord("empty proof word")
    lines = []
    for seg in split_proof_word(word):
        if counter:
            counter.tick(len(seg))
        try:
            lines.append(parse_formula(seg, strict=True))
        except ParseError as exc:
            raise MalformedProofWord(f"unparseable line segment: {exc}") from exc
    return reconstruct(tuple(lines), profile, counter)


def conclusion(proof: Proof, profile: AxiomProfile) -> Formula:
    """Last line of a valid proof; invalid proofs are rejected."""
    verdict = check(proof, profile)
    if not verdict:
        raise PilotteryError(
            f"proof invalid at line {verdict.line}: {verdict.reason}"
        )
    return proof.lines[-1]


def proof_code(proof: Proof) -> int:
    """Godel number of the proof's word form."""
    return encode(to_word(proof).word)


def load_proof_lines(text: str) -> tuple[Formula, ...]:
    """Parse a proof text file: one surface formula per line, # comments."""
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        lines.append(parse_formula(stripped))
    return tuple(lines)
