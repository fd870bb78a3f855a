"""Proof kernel: checking, word round trips, mutations, shipped fixtures."""

import random

import pytest

from pilottery.alphabet import ALPHABET
from pilottery.errors import MalformedProofWord
from pilottery.fixtures import (mini_fixture, pa_fixture_proofs,
                                profile_for_proof, shipped_proof_codes,
                                shipped_proof_lines)
from pilottery.godel import in_gamma
from pilottery.kernel import (Proof, check, conclusion, from_word,
                              proof_code, reconstruct, to_word)
from pilottery.profiles import (get_profile, mini_inconsistency_sentence,
                                mini_profile, pa_core_profile)
from pilottery.syntax import Eq, Exists, O, parse_formula


def test_one_line_axiom_proof_valid(pa_proofs):
    assert check(pa_proofs["s-axiom"], pa_core_profile()).valid


def test_empty_proof_invalid():
    verdict = check(Proof((), ()), mini_profile())
    assert not verdict.valid
    assert verdict.reason == "empty proof"


def test_unjustifiable_line_reported():
    pa = pa_core_profile()
    proof = reconstruct((parse_formula("O = SO"),), pa)
    verdict = check(proof, pa)
    assert not verdict.valid
    assert verdict.line == 1


def test_mp_and_gen_justifications(pa_proofs):
    pa = pa_core_profile()
    assert check(pa_proofs["add-zero-inst"], pa).valid
    assert check(pa_proofs["gen"], pa).valid
    # five-line chain exercising instantiation and symmetry
    assert check(pa_proofs["sym-chain"], pa).valid


def test_forward_references_rejected():
    pa = pa_core_profile()
    lines = (parse_formula("(SO + O) = SO"),
             parse_formula("∀x0 (x0 + O) = x0"))
    proof = reconstruct(lines, pa)
    verdict = check(proof, pa)
    assert not verdict.valid
    assert verdict.line == 1


def test_prefixes_of_valid_proofs_are_valid(pa_proofs, mini):
    proofs = list(pa_proofs.values()) + list(mini.proofs.values())
    for proof in proofs:
        profile = (pa_core_profile()
                   if proof in pa_proofs.values() else mini.profile)
        for cut in range(1, len(proof.lines) + 1):
            prefix = Proof(proof.lines[:cut], proof.justifications[:cut])
            assert check(prefix, profile).valid


def test_to_word_from_word_round_trip(mini, pa_proofs):
    for profile, proofs in ((mini.profile, mini.proofs.values()),
                            (pa_core_profile(), pa_proofs.values())):
        for proof in proofs:
            word = to_word(proof)
            back = from_word(word, profile)
            assert back.lines == proof.lines
            assert check(back, profile).valid == check(proof, profile).valid


def test_single_line_word_has_no_marker(pa_proofs):
    word = to_word(pa_proofs["refl"]).word
    assert "()" not in word


def test_malformed_segment():
    with pytest.raises(MalformedProofWord):
        from_word("SS(", mini_profile())


def test_empty_segment_rejected():
    with pytest.raises(MalformedProofWord):
        from_word("O=O()()O=O", mini_profile())


def test_conclusion_of_fixture_is_inconsistency_sentence(mini):
    target = mini_inconsistency_sentence()
    assert conclusion(mini.proofs["lift-mp"], mini.profile) == target
    assert isinstance(target, Exists)


def test_conclusion_requires_valid_proof():
    pa = pa_core_profile()
    bad = reconstruct((parse_formula("O = SO"),), pa)
    with pytest.raises(Exception):
        conclusion(bad, pa)


def test_conclusion_stable_under_word_round_trip(mini):
    for proof in mini.proofs.values():
        back = from_word(to_word(proof), mini.profile)
        assert conclusion(back, mini.profile) == conclusion(proof, mini.profile)


def test_proof_codes_in_gamma_and_regression(mini, pa_proofs):
    stored = shipped_proof_codes()
    fixture_proofs = {
        "mini-target-axiom": (mini.proofs["target-axiom"], mini.profile),
        "mini-lift-mp": (mini.proofs["lift-mp"], mini.profile),
        "mini-five-line": (mini.proofs["five-line"], mini.profile),
    }
    for name, proof in pa_fixture_proofs().items():
        fixture_proofs[f"pa-{name}"] = (proof, pa_core_profile())
    for name, (proof, _profile) in fixture_proofs.items():
        code = proof_code(proof)
        assert in_gamma(code)
        assert stored[name] == code, name


def test_shipped_proof_files_check_valid():
    for name, lines in shipped_proof_lines().items():
        profile = profile_for_proof(name)
        proof = reconstruct(lines, profile)
        assert check(proof, profile).valid, name


def _mutate(word: str, rng: random.Random) -> str:
    i = rng.randrange(len(word))
    replacement = rng.choice(
        [g for g in ALPHABET.symbols if g != word[i]])
    return word[:i] + replacement + word[i + 1:]


def test_single_glyph_mutations_rejected():
    """500 seeded single-glyph substitutions per shipped fixture must all
    be rejected, either as unparseable words or as invalid proofs."""
    rng = random.Random(4242)
    for name, lines in shipped_proof_lines().items():
        profile = profile_for_proof(name)
        proof = reconstruct(lines, profile)
        assert check(proof, profile).valid
        word = to_word(proof).word
        for _ in range(500):
            mutated = _mutate(word, rng)
            try:
                candidate = from_word(mutated, profile)
            except MalformedProofWord:
                continue
            verdict = check(candidate, profile)
            assert not (verdict.valid
                        and candidate.lines == proof.lines), (name, mutated[:80])
            assert not verdict.valid, (name, mutated[:80])
