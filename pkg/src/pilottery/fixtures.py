"""Shipped fixture material: the Mini theory, its refutation proofs, and
planted streams for worked examples.

The Mini theory formula is the double negation of "witness equals coded
formula"; its inconsistency target is therefore derivable in the Mini
profile both as the collapse axiom itself and via the lift implication.
Planted streams place fixture codes at chosen placements, mirroring the
hypothetical "suppose the second proof sat at place 36" style of example;
true placements (code ranks) of realistic proofs sit far beyond any digit
cache, so experiments that must reach stage iii declare small ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .kernel import Proof, load_proof_lines, proof_code, reconstruct, to_word
from .profiles import (MINI_THEORY_FORMULA, AxiomProfile,
                       mini_inconsistency_sentence, mini_profile,
                       pa_core_profile)
from .psi import ExplicitPsi
from .syntax import Eq, Formula, O, parse_formula
from .theory import TheoryCode, load_registry


@dataclass(frozen=True)
class MiniFixture:
    profile: AxiomProfile
    theory: TheoryCode
    target: Formula
    proofs: dict         # name -> Proof
    words: dict          # name -> str
    codes: dict          # name -> int


def mini_fixture() -> MiniFixture:
    profile = mini_profile()
    target = mini_inconsistency_sentence()
    theory = TheoryCode.from_formula(MINI_THEORY_FORMULA)
    axioms = dict(profile.concrete_axioms)
    m1, m2, m3 = axioms["refl-zero"], axioms["succ-nonzero"], axioms["lift"]

    lines = {
        "target-axiom": (target,),
        "lift-mp": (m1, m3, target),
        "five-line": (m1, m3, target, m2, parse_formula("∀x1 ∀x0 ¬Sx0=O")),
    }
    proofs = {name: reconstruct(ls, profile) for name, ls in lines.items()}
    words = {name: to_word(p).word for name, p in proofs.items()}
    codes = {name: proof_code(p) for name, p in proofs.items()}
    return MiniFixture(profile, theory, target, proofs, words, codes)


def pa_fixture_proofs() -> dict:
    """Hand-written PA-core proofs exercising axioms, MP and Gen."""
    pa = pa_core_profile()
    # Fixture lines avoid axiom schemas with a once-occurring slot (K's
    # consequent-of-consequent, one-sided or-introduction): those accept
    # single-glyph rewrites of the free slot, and the mutation harness
    # demands every mutation be rejected.
    texts = {
        "refl": ("SSO = SSO",),
        "s-axiom": (
            "((O=O → (O=O → O=O)) → "
            "((O=O → O=O) → (O=O → O=O)))",
        ),
        "add-zero-inst": (
            "∀x0 (x0 + O) = x0",
            "(∀x0 (x0 + O) = x0 → (SO + O) = SO)",
            "(SO + O) = SO",
        ),
        "gen": ("O=O", "∀x2 O=O"),
        "induction-inst": (
            "((O=O ∧ ∀x0 (x0=x0 → Sx0=Sx0)) → ∀x0 x0=x0)",
        ),
        "sym-chain": (
            "∀x0 (x0 + O) = x0",
            "(∀x0 (x0 + O) = x0 → (O + O) = O)",
            "(O + O) = O",
            "((O + O) = O → O = (O + O))",
            "O = (O + O)",
        ),
    }
    return {name: reconstruct(tuple(parse_formula(t) for t in lines), pa)
            for name, lines in texts.items()}


def planted_source(code: int, placement: int,
                   lead_codes: tuple[int, ...] = ()) -> ExplicitPsi:
    """A stream placing `code` after optional smaller lead codes, with a
    declared placement; lead codes keep their true ranks."""
    entries = [(c, None) for c in lead_codes]
    entries.append((code, placement))
    return ExplicitPsi(entries, describe=f"planted(placement={placement})")


# ---------------------------------------------------------------------------
# Shipped data files
# ---------------------------------------------------------------------------

def _data(name: str) -> str:
    return resources.files("pilottery").joinpath(f"_data/{name}").read_text(
        encoding="utf-8")


def shipped_proof_lines() -> dict:
    """Name -> formula lines for every shipped proof text file."""
    proofs = {}
    root = resources.files("pilottery").joinpath("_data/proofs")
    for entry in root.iterdir():
        if entry.name.endswith(".proof"):
            proofs[entry.name[:-len(".proof")]] = load_proof_lines(
                entry.read_text(encoding="utf-8"))
    return proofs


def shipped_proof_codes() -> dict:
    """Name -> stored regression Godel number of the proof's word form."""
    codes = {}
    for line in _data("proofs/codes.tsv").splitlines():
        if line.startswith("#") or not line.strip():
            continue
        name, code = line.split("\t")
        codes[name] = int(code)
    return codes


def shipped_registry() -> dict:
    return load_registry(_data("theories.tsv"))


def profile_for_proof(name: str) -> AxiomProfile:
    return mini_profile() if name.startswith("mini") else pa_core_profile()
