"""The ordered stream of inconsistency-proof codes, with three backends.

* ``EnumeratedPsi`` performs genuine exhaustive enumeration: every valid
  proof word of the profile, up to the code bound, whose conclusion has
  the inconsistency-target shape. Feasible only for schema-free profiles
  (Mini) and bounds with little slack over the shortest such proofs.
* ``SyntheticPsi`` simulates the stream: it scans word codes upward and
  includes each with a fixed probability, deterministic under its seed.
  Structural properties (strict code growth, placement = rank) are real;
  membership is not.
* ``ExplicitPsi`` replays a given entry list, e.g. from a cache file or a
  planted experiment. Entries may declare a placement that differs from
  the code's true rank, reproducing the hypothetical "suppose the second
  proof sat at place 36" style of worked example; whether placements are
  declared or derived is recorded and surfaced.

Entries are emitted in strictly increasing code order and cached, so a
single writer advances while snapshot reads stay consistent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ExhaustedBound, UnsupportedProfile
from .godel import encode, in_gamma, rank
from .kernel import LINE_SHIFT, reconstruct
from .profiles import ZERO_EQ_ONE_CODE, AxiomProfile
from .syntax import (Exists, Eq, Forall, Formula, Imp, Var, free_vars,
                     numeral, word_length, word_of)
from .theory import extract_theory, is_lottery_number


@dataclass(frozen=True)
class PsiEntry:
    n: int
    code: int
    placement: int


class PsiSource:
    """Base stream: strictly increasing codes, cached prefix, deterministic."""

    def __init__(self, describe: str):
        self._cache: list[PsiEntry] = []
        self.describe = describe

    # -- to implement ---------------------------------------------------
    def _produce_next(self) -> PsiEntry:
        raise NotImplementedError

    # -- shared ----------------------------------------------------------
    def next_entry(self) -> PsiEntry:
        entry = self._produce_next()
        if self._cache and entry.code <= self._cache[-1].code:
            raise AssertionError("stream codes must strictly increase")
        if entry.n != len(self._cache) + 1:
            raise AssertionError("stream indices must be consecutive")
        self._cache.append(entry)
        return entry

    def entry(self, n: int) -> PsiEntry:
        """The nth entry (1-based), advancing as needed."""
        if n < 1:
            raise ValueError("entry indices are 1-based")
        while len(self._cache) < n:
            self.next_entry()
        return self._cache[n - 1]

    def snapshot(self) -> tuple[PsiEntry, ...]:
        return tuple(self._cache)


def next_psi(src: PsiSource) -> PsiEntry:
    return src.next_entry()


class SyntheticPsi(PsiSource):
    """Bernoulli inclusion over word codes scanned upward."""

    def __init__(self, seed: int, density: float):
        if not 0 < density <= 1:
            raise ValueError("density must lie in (0, 1]")
        super().__init__(f"synthetic(seed={seed}, density={density})")
        self.seed = seed
        self.density = density
        self._rng = random.Random(seed)
        self._next_code = 1

    def _produce_next(self) -> PsiEntry:
        code = self._next_code
        while True:
            if in_gamma(code) and self._rng.random() < self.density:
                self._next_code = code + 1
                return PsiEntry(len(self._cache) + 1, code, rank(code))
            code += 1


class ExplicitPsi(PsiSource):
    """Replays a fixed entry list; placements may be declared."""

    def __init__(self, entries: Iterable[tuple[int, Optional[int]]],
                 declared_placements: bool = False,
                 describe: str = "explicit"):
        super().__init__(describe)
        self.declared_placements = declared_placements
        self._pending: list[PsiEntry] = []
        last = 0
        for i, (code, placement) in enumerate(entries, 1):
            if code <= last:
                raise ValueError("explicit entries must strictly increase")
            last = code
            if placement is None:
                placement = rank(code)
            elif placement != rank(code):
                self.declared_placements = True
            self._pending.append(PsiEntry(i, code, placement))
        self._pos = 0

    def _produce_next(self) -> PsiEntry:
        if self._pos >= len(self._pending):
            raise ExhaustedBound("explicit stream has no further entries")
        entry = self._pending[self._pos]
        self._pos += 1
        return entry


# ---------------------------------------------------------------------------
# Exhaustive enumeration for schema-free profiles
# ---------------------------------------------------------------------------

def _is_target_shaped(f: Formula) -> bool:
    if not (isinstance(f, Exists) and f.var == 1):
        return False
    if free_vars(f.body) - {1}:
        return False
    return extract_theory(f) is not None


def _min_target_length() -> int:
    """Structural floor for any target-shaped conclusion's word length."""
    shortest = Exists(1, Eq(Var(1), numeral(ZERO_EQ_ONE_CODE)))
    return word_length(shortest)


def enumerate_lottery_words(profile: AxiomProfile, max_word_len: int) -> list[str]:
    """All valid proof words of glyph length <= max_word_len whose final
    line is target-shaped, via depth-first search over justifiable line
    sequences. Complete for schema-free profiles; the search stays small
    only when the bound leaves little slack over the shortest targets."""
    if not profile.enumerable:
        raise UnsupportedProfile(
            f"profile {profile.name!r} has axiom schemas; enumeration "
            "requires a concrete axiom list"
        )
    axioms = [f for _, f in profile.concrete_axioms]
    min_tail = _min_target_length() + len(LINE_SHIFT)
    results: list[str] = []

    def candidates(prefix: list[Formula], budget: int) -> list[Formula]:
        """Possible next lines. A candidate is useful either as a final
        target-shaped line (within `budget`) or as a prefix line, which
        must additionally leave room for a target tail. Generalizations
        are never target-shaped, so they face the tighter bound."""
        prefix_budget = budget - min_tail
        seen: dict[Formula, None] = {}
        for f in axioms:
            if word_length(f) <= budget:
                seen.setdefault(f, None)
        for imp in prefix:
            if isinstance(imp, Imp) and imp.left in prefix:
                if word_length(imp.right) <= budget:
                    seen.setdefault(imp.right, None)
        for body in prefix:
            base = word_length(body) + 2  # forall glyph + var base glyph
            for v in range(max(0, prefix_budget - base) + 1):
                if base + v > prefix_budget:
                    break
                seen.setdefault(Forall(v, body), None)
        return list(seen)

    def extend(prefix: list[Formula], used: int) -> None:
        sep = len(LINE_SHIFT) if prefix else 0
        for f in candidates(prefix, max_word_len - used - sep):
            cost = used + sep + word_length(f)
            if cost <= max_word_len and _is_target_shaped(f):
                results.append(LINE_SHIFT.join(
                    word_of(line) for line in prefix + [f]))
            # Recurse only if some further target line could still fit.
            if cost + min_tail <= max_word_len:
                extend(prefix + [f], cost)

    extend([], 0)
    return results


class EnumeratedPsi(PsiSource):
    """Genuine enumeration of lottery numbers up to a code bound."""

    def __init__(self, profile: AxiomProfile, code_bound: int):
        super().__init__(
            f"enumerated(profile={profile.name}, code_bound<{len(str(code_bound))} digits>)"
        )
        self.profile = profile
        self.code_bound = code_bound
        self._materialized: Optional[list[PsiEntry]] = None
        self._pos = 0

    def _materialize(self) -> list[PsiEntry]:
        if self._materialized is None:
            max_len = _word_length_bound(self.code_bound)
            words = enumerate_lottery_words(self.profile, max_len)
            coded = sorted(encode(w) for w in words)
            entries = []
            for i, code in enumerate(c for c in coded if c <= self.code_bound):
                entries.append(PsiEntry(i + 1, code, rank(code)))
            self._materialized = entries
        return self._materialized

    def _produce_next(self) -> PsiEntry:
        entries = self._materialize()
        if self._pos >= len(entries):
            raise ExhaustedBound(
                "no further lottery numbers below the code bound"
            )
        entry = entries[self._pos]
        self._pos += 1
        return entry


def _word_length_bound(code_bound: int) -> int:
    from .godel import BASE
    length = 0
    while code_bound:
        code_bound //= BASE
        length += 1
    return length


def recheck_entry(entry: PsiEntry, profile: AxiomProfile) -> bool:
    """Independent re-validation of an enumerated entry."""
    from .godel import decode
    from .kernel import from_word, check
    try:
        proof = from_word(decode(entry.code), profile)
    except Exception:
        return False
    if not check(proof, profile):
        return False
    tc = extract_theory(proof.lines[-1])
    if tc is None:
        return False
    return (is_lottery_number(entry.code, tc, profile)
            and entry.placement == rank(entry.code))


# ---------------------------------------------------------------------------
# Cache files: versioned header + append-only (n, code, placement) rows
# ---------------------------------------------------------------------------

_CACHE_HEADER = "#psi-cache v1"


def dump_psi_cache(entries: Iterable[PsiEntry], source_desc: str,
                   declared_placements: bool) -> str:
    lines = [
        _CACHE_HEADER,
        f"#source {source_desc}",
        f"#placements {'declared' if declared_placements else 'derived'}",
    ]
    lines += [f"{e.n}\t{e.code}\t{e.placement}" for e in entries]
    return "\n".join(lines) + "\n"


def append_psi_cache(path, entries: Iterable[PsiEntry], source_desc: str,
                     declared_placements: bool) -> None:
    import os
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_psi_cache(entries, source_desc, declared_placements))
        return
    existing = load_psi_cache_entries(path)
    last_n = existing[-1].n if existing else 0
    last_code = existing[-1].code if existing else 0
    with open(path, "a", encoding="utf-8") as fh:
        for e in entries:
            if e.n <= last_n or e.code <= last_code:
                continue
            fh.write(f"{e.n}\t{e.code}\t{e.placement}\n")
            last_n, last_code = e.n, e.code


def _read_psi_cache(path) -> tuple[list[PsiEntry], bool]:
    entries = []
    declared = False
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n")
        if first != _CACHE_HEADER:
            raise ValueError(f"not a psi cache file (header {first!r})")
        for raw in fh:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#placements"):
                declared = line.endswith("declared")
                continue
            if line.startswith("#"):
                continue
            n, code, placement = line.split("\t")
            entries.append(PsiEntry(int(n), int(code), int(placement)))
    return entries, declared


def load_psi_cache_entries(path) -> list[PsiEntry]:
    return _read_psi_cache(path)[0]


def load_psi_cache(path) -> ExplicitPsi:
    entries, declared = _read_psi_cache(path)
    return ExplicitPsi(
        [(e.code, e.placement) for e in entries],
        declared_placements=declared,
        describe=f"cache({path})",
    )
