"""The no-winner probability model: products, tails, and simulation.

Under the random model, index n wins with probability 10^-n (a uniformly
drawn width-n digit string must be all zeros), so the probability that no
positive index wins is the convergent product of (1 - 10^-n). Partial
products are computed in exact rational arithmetic with a certified tail
bound; floating point appears only inside Monte Carlo aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class ProductValue:
    partial: Fraction        # exact partial product
    terms: int
    first_factor: int        # factors run over n in [first_factor, first_factor+terms)
    error_bound: Fraction    # certified bound on partial - (infinite product)

    def decimal(self, precision: int, direction: str = "floor") -> str:
        """Decimal rendering with a certified rounding direction."""
        if precision < 1:
            raise ValueError("precision must be positive")
        scaled = self.partial * 10 ** precision
        digits = scaled.numerator // scaled.denominator
        if direction == "ceil" and scaled != digits:
            digits += 1
        elif direction == "nearest":
            digits = (2 * scaled.numerator + scaled.denominator) // (
                2 * scaled.denominator)
        elif direction not in ("floor", "ceil", "nearest"):
            raise ValueError(f"unknown rounding direction {direction!r}")
        text = str(digits).zfill(precision + 1)
        return f"{text[:-precision]}.{text[-precision:]}"


def _partial_product(first: int, terms: int) -> Fraction:
    partial = Fraction(1)
    for n in range(first, first + terms):
        partial *= 1 - Fraction(1, 10 ** n)
    return partial


def _tail_sum_bound(after: int) -> Fraction:
    # sum_{n > after} 10^-n, a geometric tail
    return Fraction(1, 9 * 10 ** after)


def product_p(terms: int, precision: int = 30) -> ProductValue:
    """Partial product over n = 1..terms of (1 - 10^-n).

    The infinite product lies in [partial - error_bound, partial]:
    the discarded factors multiply to at least 1 - sum of their 10^-n.
    The precision argument is a convenience for callers that only want
    the decimal; the stored value is exact.
    """
    if terms < 1:
        raise ValueError("need at least one factor")
    partial = _partial_product(1, terms)
    bound = partial * _tail_sum_bound(terms)
    return ProductValue(partial, terms, 1, bound)


def tail_p(n: int, terms: int, precision: int = 30) -> ProductValue:
    """Partial product over j = n+1..n+terms of (1 - 10^-j): the modeled
    probability of no winner greater than n. tail_p(0, t) == product_p(t)."""
    if n < 0:
        raise ValueError("tail index must be a natural number")
    if terms < 1:
        raise ValueError("need at least one factor")
    partial = _partial_product(n + 1, terms)
    bound = partial * _tail_sum_bound(n + terms)
    return ProductValue(partial, terms, n + 1, bound)


def truncated_no_winner_probability(n_max: int) -> Fraction:
    """Probability that none of the indices 1..n_max wins."""
    if n_max == 0:
        return Fraction(1)
    return _partial_product(1, n_max)


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrialRecord:
    seed: int
    n_range: tuple[int, int]
    winners_found: tuple[int, ...]
    stopped_at_stage: int   # 0 when the run was never stopped


@dataclass(frozen=True)
class SimulationResult:
    n_max: int
    trials: int
    seed: int
    no_winner_freq: Fraction
    per_n_freq: tuple[Fraction, ...]   # index 0 is n=1
    records: tuple[TrialRecord, ...]   # empty unless keep_records


def simulate_winners(n_max: int, trials: int, seed: int,
                     keep_records: bool = False) -> SimulationResult:
    """Draw a uniform width-n digit string per trial and index; the index
    wins when the draw is all zeros. Deterministic under the seed; records
    are materialized only on request to keep million-trial runs light."""
    if trials < 1:
        raise ValueError("need at least one trial")
    if n_max < 0:
        raise ValueError("n_max must be a natural number")
    rng = np.random.Generator(np.random.PCG64(seed))
    wins = np.zeros((trials, n_max), dtype=bool)
    for n in range(1, n_max + 1):
        draws = rng.integers(0, 10, size=(trials, n), dtype=np.uint8)
        wins[:, n - 1] = ~draws.any(axis=1)
    no_winner = int((~wins.any(axis=1)).sum())
    per_n = tuple(Fraction(int(wins[:, n - 1].sum()), trials)
                  for n in range(1, n_max + 1))
    records: tuple[TrialRecord, ...] = ()
    if keep_records:
        records = tuple(
            TrialRecord(seed, (1, n_max),
                        tuple(int(n + 1) for n in np.flatnonzero(wins[t])), 0)
            for t in range(trials)
        )
    return SimulationResult(n_max, trials, seed, Fraction(no_winner, trials),
                            per_n, records)


def sequential_experiment(max_stages: int, seed: int,
                          horizon: int = 10) -> TrialRecord:
    """Scan upward for winners stage by stage.

    Each stage examines the next `horizon` indices after the last winner;
    finding one starts the next stage. Stops at the first stage with no
    winner in its window; stopped_at_stage is that 1-based stage, or 0
    when all max_stages stages succeeded.
    """
    if max_stages < 1:
        raise ValueError("need at least one stage")
    rng = np.random.Generator(np.random.PCG64(seed))
    winners: list[int] = []
    position = 0
    stopped = 0
    for stage in range(1, max_stages + 1):
        found: Optional[int] = None
        for n in range(position + 1, position + horizon + 1):
            draw = rng.integers(0, 10, size=n, dtype=np.uint8)
            if not draw.any():
                found = n
                break
        if found is None:
            stopped = stage
            break
        winners.append(found)
        position = found
    return TrialRecord(seed, (1, position + horizon), tuple(winners), stopped)
