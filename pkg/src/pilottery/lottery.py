"""Winner decisions, the certificate checker, and the brute-force solver.

An index n wins under shift k when adding k (mod 10^n) to the n-wide digit
group at the n-th stream entry's placement reproduces the group at
position n. The certificate checker validates a proposed proof code
(stage i), locates its index by advancing the stream (stage ii), and tests
the winner equation (stage iii); per-stage step counters are exposed
rather than any claimed complexity bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (CacheExhausted, ExhaustedBound, ResourceBudgetExceeded,
                     StreamExhausted)
from .godel import in_gamma, decode, rank
from .kernel import StepCounter, check, from_word
from .pidigits import DigitCache, pi_group, t_k
from .profiles import AxiomProfile
from .psi import PsiEntry, PsiSource
from .theory import TheoryCode, inconsistency_target, is_lottery_number
from .errors import MalformedProofWord, NotInGamma


@dataclass(frozen=True)
class WinnerVerdict:
    n: int
    k: int
    placement: int
    lhs: str
    rhs: str
    is_winner: bool


def winner_eq(n: int, placement: int, k: int, cache: DigitCache) -> WinnerVerdict:
    """Evaluate the winner equation for index n at the given placement."""
    if n < 1 or placement < 1:
        raise ValueError("index and placement are 1-based positives")
    lhs = t_k(pi_group(placement, n, cache), k)
    rhs = pi_group(n, n, cache)
    return WinnerVerdict(n, k, placement, lhs, rhs, lhs == rhs)


def construct_winning_k(n: int, placement: int, cache: DigitCache) -> int:
    """The unique shift in [0, 10^n) that makes (n, placement) a winner."""
    target = int(pi_group(n, n, cache))
    source = int(pi_group(placement, n, cache))
    return (target - source) % 10 ** n


# ---------------------------------------------------------------------------
# Certificate checking
# ---------------------------------------------------------------------------

REJECT_STAGE_I = "i"
REJECT_STAGE_III = "iii"


@dataclass(frozen=True)
class CertResult:
    accepted: bool
    stage: Optional[str]          # rejection stage, None when accepted
    reason: Optional[str]
    steps_by_stage: dict
    index: Optional[int] = None   # located stream index, stages ii/iii
    winner: Optional[WinnerVerdict] = None

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else f"reject({self.stage})"


def check_certificate(g: int, p: int, k: int, src: PsiSource,
                      cache: DigitCache, profile: AxiomProfile) -> CertResult:
    """Validate a proposed certificate p for theory code g under shift k.

    Accept iff p codes a valid proof of g's inconsistency target (stage i)
    and p's index n in the stream satisfies the winner equation at the
    stream entry's placement (stage iii). Stage ii locates n by advancing
    the stream; running past p raises StreamExhausted, flagging a
    backend/input mismatch rather than a verdict.
    """
    counter = StepCounter()
    steps = {"i": 0, "ii": 0, "iii": 0}

    # -- stage i: p codes a correct proof of g's target ------------------
    try:
        tc = TheoryCode.from_code(g)
    except ValueError:
        steps["i"] = counter.steps
        return CertResult(False, REJECT_STAGE_I, "g is not a theory code",
                          dict(steps))
    if not in_gamma(p):
        steps["i"] = counter.steps + 1
        return CertResult(False, REJECT_STAGE_I, "p is not a word code",
                          dict(steps))
    word = decode(p)
    counter.tick(len(word))
    try:
        proof = from_word(word, profile, counter)
    except MalformedProofWord as exc:
        steps["i"] = counter.steps
        return CertResult(False, REJECT_STAGE_I, str(exc), dict(steps))
    verdict = check(proof, profile, counter)
    steps["i"] = counter.steps
    if not verdict:
        return CertResult(
            False, REJECT_STAGE_I,
            f"invalid proof at line {verdict.line}: {verdict.reason}",
            dict(steps))
    if proof.lines[-1] != inconsistency_target(tc):
        return CertResult(False, REJECT_STAGE_I,
                          "conclusion is not the inconsistency target of g",
                          dict(steps))

    # -- stage ii: locate p's index by advancing the stream --------------
    n = 0
    entry: Optional[PsiEntry] = None
    while True:
        n += 1
        try:
            candidate = src.entry(n)
        except ExhaustedBound as exc:
            raise StreamExhausted(
                f"stream ended before emitting p (searched {n - 1} entries); "
                "backend/input mismatch"
            ) from exc
        steps["ii"] += 1
        if candidate.code == p:
            entry = candidate
            break
        if candidate.code > p:
            raise StreamExhausted(
                f"stream passed p at index {n} without emitting it; "
                "backend/input mismatch"
            )

    # -- stage iii: the winner equation ----------------------------------
    steps["iii"] = entry.n
    wv = winner_eq(entry.n, entry.placement, k, cache)
    if wv.is_winner:
        return CertResult(True, None, None, dict(steps), entry.n, wv)
    return CertResult(False, REJECT_STAGE_III,
                      f"shifted group {wv.lhs} != {wv.rhs}",
                      dict(steps), entry.n, wv)


# ---------------------------------------------------------------------------
# Maximal-winner scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MwReport:
    k: int
    scan_bound: int
    winners: tuple[int, ...]          # always contains 0
    max_winner_within_bound: int
    truncated: bool = False
    truncation_reason: Optional[str] = None
    rows: tuple[WinnerVerdict, ...] = ()


def scan_max_winner(k: int, n_max: int, src: PsiSource,
                    cache: DigitCache) -> MwReport:
    """Winners among stream indices 1..n_max; 0 counts as a winner by
    convention, so the maximum is always defined. Exhausted streams or
    caches truncate the report with an explicit flag."""
    winners = [0]
    rows = []
    truncated = False
    reason = None
    for n in range(1, n_max + 1):
        try:
            entry = src.entry(n)
        except ExhaustedBound:
            truncated = True
            reason = f"stream exhausted at n={n}"
            break
        try:
            wv = winner_eq(entry.n, entry.placement, k, cache)
        except CacheExhausted as exc:
            truncated = True
            reason = f"digit cache exhausted at n={n}: {exc}"
            break
        rows.append(wv)
        if wv.is_winner:
            winners.append(n)
    return MwReport(k, n_max, tuple(winners), max(winners),
                    truncated, reason, tuple(rows))


# ---------------------------------------------------------------------------
# Brute-force solving with explicit budgets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Budget:
    max_certificate_digits: int = 10 ** 6
    max_candidates: int = 10 ** 6


def brute_force_solve(w: int, j: int, k: int, src: PsiSource,
                      cache: DigitCache, profile: AxiomProfile,
                      budget: Budget = Budget()) -> bool:
    """Decide whether some certificate of decimal length < |w|^j is
    accepted for w, where |w| is w's decimal length.

    Only stream entries can be accepted (stage ii must locate the code),
    so the scan ranges over entries below the length bound instead of
    every integer; the result is identical and the bound is honored.
    """
    length_bound = len(str(w)) ** j
    if length_bound > budget.max_certificate_digits:
        raise ResourceBudgetExceeded(
            length_bound,
            f"certificate length bound {length_bound} exceeds budget "
            f"{budget.max_certificate_digits}")
    if length_bound <= 1:
        return False  # no natural number has decimal length < 1
    n = 0
    while True:
        n += 1
        if n > budget.max_candidates:
            raise ResourceBudgetExceeded(
                length_bound, f"candidate budget {budget.max_candidates} "
                f"exhausted at stream index {n}")
        try:
            entry = src.entry(n)
        except ExhaustedBound:
            return False
        if len(str(entry.code)) >= length_bound:
            return False  # codes only grow from here
        result = check_certificate(w, entry.code, k, src, cache, profile)
        if result.accepted:
            return True


def exhaustive_solve(w: int, j: int, k: int, src: PsiSource,
                     cache: DigitCache, profile: AxiomProfile,
                     budget: Budget = Budget()) -> bool:
    """Literal certificate scan over every natural below the length bound;
    an oracle for tiny bounds only."""
    length_bound = len(str(w)) ** j
    if length_bound <= 1:
        return False
    limit = 10 ** (length_bound - 1)
    if limit > budget.max_candidates:
        raise ResourceBudgetExceeded(
            length_bound, f"{limit} candidates exceed the budget")
    for p in range(1, limit):
        try:
            if check_certificate(w, p, k, src, cache, profile).accepted:
                return True
        except StreamExhausted:
            continue
    return False
