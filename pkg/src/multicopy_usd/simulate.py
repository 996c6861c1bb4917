"""Seeded Monte Carlo discrimination trials.

Outcomes are drawn by inverse CDF over the Born probabilities with a fixed
outcome order (identify 1..N, then inconclusive), so a (seed, configuration)
pair always reproduces the same counts. Trials are generated in fixed-size
batches with independently spawned substreams and merged in batch order,
which keeps results identical whether batches run serially or concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discrimination import Povm, usd_povm
from .states import PureState, StateEnsemble
from .trine import (
    multitrine_representation,
    p_max_multitrine,
    pairwise_success,
)

#: Trials per RNG substream batch.
BATCH_SIZE = 1 << 16


@dataclass(frozen=True)
class DiscriminationOutcome:
    """One measurement result: a 1-based identified index, or None if inconclusive."""

    index: int | None

    def __post_init__(self):
        if self.index is not None and self.index < 1:
            raise ValueError("identified index is 1-based")

    @property
    def inconclusive(self) -> bool:
        return self.index is None


@dataclass(frozen=True, eq=False)
class TrialStats:
    """Aggregated trial counts.

    ``counts[o, s]`` is the number of trials that prepared state s+1 and saw
    outcome o, where rows 0..N-1 identify states 1..N and row N is the
    inconclusive outcome. Diagonal identification counts are successes,
    off-diagonal ones are errors, and errors must never occur for a valid
    zero-error measurement.
    """

    n_trials: int
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1] + 1:
            raise ValueError("counts must have shape (N + 1, N)")
        if np.any(counts < 0) or counts.sum() != self.n_trials:
            raise ValueError("counts must be nonnegative and sum to n_trials")
        counts = counts.copy()
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def n_states(self) -> int:
        return self.counts.shape[1]

    @property
    def success_count(self) -> int:
        return int(np.trace(self.counts[: self.n_states]))

    @property
    def error_count(self) -> int:
        identified = self.counts[: self.n_states]
        return int(identified.sum() - np.trace(identified))

    @property
    def inconclusive_count(self) -> int:
        return int(self.counts[self.n_states].sum())

    @property
    def success_rate(self) -> float:
        return self.success_count / self.n_trials

    @property
    def error_rate(self) -> float:
        return self.error_count / self.n_trials

    @property
    def inconclusive_rate(self) -> float:
        return self.inconclusive_count / self.n_trials

    def to_json(self) -> dict:
        return {
            "n_trials": self.n_trials,
            "counts": [[int(v) for v in row] for row in self.counts],
            "success_rate": self.success_rate,
            "inconclusive_rate": self.inconclusive_rate,
            "error_count": self.error_count,
        }


def sample_outcome(
    povm: Povm, state: PureState, rng: np.random.Generator
) -> DiscriminationOutcome:
    """Draw one outcome for a prepared state by inverse CDF."""
    probs = povm.born_probabilities(state)
    pick = int(np.searchsorted(np.cumsum(probs), rng.random(), side="right"))
    pick = min(pick, povm.n_states)
    if pick == povm.n_states:
        return DiscriminationOutcome(None)
    return DiscriminationOutcome(pick + 1)


def _outcome_cdf(povm: Povm, ensemble: StateEnsemble) -> np.ndarray:
    """Per-prepared-state outcome CDF, shape (N, N + 1), last column exactly 1."""
    cdf = np.cumsum(
        np.vstack([povm.born_probabilities(s) for s in ensemble.states]), axis=1
    )
    cdf[:, -1] = 1.0
    return cdf


def _batches(n_trials: int, seed) -> list[tuple[int, np.random.Generator]]:
    n_batches = -(-n_trials // BATCH_SIZE)
    children = np.random.SeedSequence(seed).spawn(n_batches)
    sizes = [BATCH_SIZE] * (n_batches - 1) + [n_trials - BATCH_SIZE * (n_batches - 1)]
    return [(size, np.random.default_rng(child)) for size, child in zip(sizes, children)]


def _draw_prepared(
    rng: np.random.Generator, size: int, prior_cdf: np.ndarray
) -> np.ndarray:
    prepared = np.searchsorted(prior_cdf, rng.random(size), side="right")
    return np.minimum(prepared, prior_cdf.size - 1)


def run_trials(
    ensemble: StateEnsemble, povm: Povm, n_trials: int, seed
) -> TrialStats:
    """Independent prepare-and-measure trials, deterministic for a fixed seed.

    Each trial draws the prepared state from the ensemble priors and the
    outcome from the Born probabilities of the measurement.
    """
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    if povm.n_states != ensemble.n_states:
        raise ValueError("need one identification effect per ensemble state")
    n = ensemble.n_states
    cdf = _outcome_cdf(povm, ensemble)
    prior_cdf = np.cumsum(ensemble.priors)
    prior_cdf[-1] = 1.0
    counts = np.zeros((n + 1, n), dtype=np.int64)
    for size, rng in _batches(n_trials, seed):
        prepared = _draw_prepared(rng, size, prior_cdf)
        draws = rng.random(size)
        outcomes = np.empty(size, dtype=np.int64)
        for j in range(n):
            mask = prepared == j
            outcomes[mask] = np.searchsorted(cdf[j], draws[mask], side="right")
        np.minimum(outcomes, n, out=outcomes)
        counts += np.bincount(
            outcomes * n + prepared, minlength=(n + 1) * n
        ).reshape(n + 1, n)
    return TrialStats(n_trials, counts)


def pairwise_strategy(copies: int, n_trials: int, seed) -> TrialStats:
    """Measure trine copies two at a time with the optimal pair measurement.

    Requires an even copy count; for an odd count the caller discards one
    copy first, which costs nothing. A trial identifies its state when any
    pair does. Identifications from distinct pairs must agree with the
    prepared state; a disagreement would mean the pair measurement is not
    zero-error and raises immediately.
    """
    if copies < 2 or copies % 2 != 0:
        raise ValueError("pairwise strategy needs an even copy count of at least 2")
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    pair_ensemble = multitrine_representation(2)
    pair_povm = usd_povm(pair_ensemble, p_max_multitrine(2))
    cdf = _outcome_cdf(pair_povm, pair_ensemble)
    prior_cdf = np.cumsum(pair_ensemble.priors)
    prior_cdf[-1] = 1.0
    n = pair_ensemble.n_states
    n_pairs = copies // 2
    counts = np.zeros((n + 1, n), dtype=np.int64)
    for size, rng in _batches(n_trials, seed):
        prepared = _draw_prepared(rng, size, prior_cdf)
        draws = rng.random((size, n_pairs))
        pair_outcomes = np.empty((size, n_pairs), dtype=np.int64)
        for j in range(n):
            mask = prepared == j
            pair_outcomes[mask] = np.searchsorted(
                cdf[j], draws[mask].ravel(), side="right"
            ).reshape(-1, n_pairs)
        np.minimum(pair_outcomes, n, out=pair_outcomes)
        identified = pair_outcomes < n
        if np.any(pair_outcomes[identified] != np.broadcast_to(
            prepared[:, None], pair_outcomes.shape
        )[identified]):
            raise RuntimeError(
                "pair measurements identified different states; "
                "the pair measurement is not zero-error"
            )
        any_identified = identified.any(axis=1)
        outcomes = np.where(any_identified, prepared, n)
        counts += np.bincount(
            outcomes * n + prepared, minlength=(n + 1) * n
        ).reshape(n + 1, n)
    return TrialStats(n_trials, counts)


def strategy_report(copies: int, n_trials: int, seed) -> dict:
    """Collective optimum versus pairwise measurement at one copy count.

    Runs both strategies (the pairwise one discards a copy when the count is
    odd) and reports analytic and measured success rates side by side, plus
    the single-copy baseline of 0.
    """
    if copies < 2:
        raise ValueError("comparison needs at least 2 copies")
    representation = multitrine_representation(copies)
    optimum = p_max_multitrine(copies)
    collective_povm = usd_povm(representation, optimum)
    collective = run_trials(representation, collective_povm, n_trials, seed)
    measured_copies = copies if copies % 2 == 0 else copies - 1
    pairwise = pairwise_strategy(measured_copies, n_trials, seed)
    return {
        "schema": 1,
        "copies": copies,
        "n_trials": n_trials,
        "seed": seed,
        "single_copy_success": 0.0,
        "collective": {"analytic_success": optimum, **collective.to_json()},
        "pairwise": {
            "analytic_success": pairwise_success(copies),
            "measured_copies": measured_copies,
            **pairwise.to_json(),
        },
    }
