"""Copy-count feasibility bounds and constructive witness ensembles.

Given N candidate states spanning a ``dim``-dimensional space and ``copies``
copies of the prepared state, zero-error identification is possible exactly
when the set of copy products is linearly independent. Counting arguments
give a necessary bound (the symmetric-subspace dimension) and a sufficient
bound (copies + dim - 1) on N; both are tight, and the witness constructors
below realize each extreme with randomized, self-verifying ensembles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .states import (
    DISTINCT_TOL,
    TENSOR_CAP,
    PureState,
    StateEnsemble,
    is_linearly_independent,
    li_rank,
    sym_dim,
    tensor_power,
    tensor_product,
)

#: Consecutive rejected samples tolerated before a witness search gives up.
MAX_REJECTIONS = 200


class Feasibility(str, enum.Enum):
    IMPOSSIBLE = "Impossible"
    GUARANTEED = "Guaranteed"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of the two counting bounds for one (N, copies, dim) query."""

    verdict: Feasibility
    necessary_max: int
    sufficient_max: int
    n_states: int
    copies: int
    dim: int

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "verdict": self.verdict.value,
            "necessary_max": self.necessary_max,
            "sufficient_max": self.sufficient_max,
            "N": self.n_states,
            "C": self.copies,
            "D": self.dim,
        }


def necessary_max(copies: int, dim: int) -> int:
    """Largest N not excluded by the symmetric-subspace dimension."""
    return sym_dim(copies, dim)


def sufficient_max(copies: int, dim: int) -> int:
    """Largest N for which any distinct state set is guaranteed feasible."""
    if copies < 1 or dim < 1:
        raise ValueError("copies and dim must be at least 1")
    return copies + dim - 1


def classify(n_states: int, copies: int, dim: int) -> FeasibilityVerdict:
    """Classify (N, copies, dim) against both bounds.

    Impossible when N exceeds the necessary bound, Guaranteed when N is within
    the sufficient bound, Indeterminate in the gap (where the answer depends
    on the actual states). For qubits (dim 2) the bounds coincide at
    copies + 1, so the gap is empty. The necessary bound is checked first;
    for dim 1 the sufficient bound is vacuous because no two distinct states
    fit in one dimension.
    """
    if n_states < 1:
        raise ValueError("n_states must be at least 1")
    nec = necessary_max(copies, dim)
    suf = sufficient_max(copies, dim)
    if n_states > nec:
        verdict = Feasibility.IMPOSSIBLE
    elif n_states <= suf:
        verdict = Feasibility.GUARANTEED
    else:
        verdict = Feasibility.INDETERMINATE
    return FeasibilityVerdict(verdict, nec, suf, n_states, copies, dim)


def haar_state(dim: int, rng: np.random.Generator) -> PureState:
    """State drawn uniformly from the unit sphere in the given dimension."""
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.normalized(vec)


def _distinct_from_all(candidate: PureState, kept: list[PureState]) -> bool:
    return all(
        abs(candidate.overlap(s)) <= 1.0 - DISTINCT_TOL for s in kept
    )


def achievability_witness(
    copies: int, dim: int, rng: np.random.Generator
) -> StateEnsemble:
    """Random ensemble meeting the necessary bound with equality.

    Greedily samples uniform random states, keeping a candidate only when it
    is distinct from the kept states and its copy product strictly increases
    the rank of the kept copy products, until N = necessary_max(copies, dim)
    states are collected. The full-rank postcondition is re-verified before
    returning.
    """
    n_target = sym_dim(copies, dim)
    if dim ** copies > TENSOR_CAP:
        raise ValueError("copy products would exceed the dense tensor cap")
    kept: list[PureState] = []
    powers: list[PureState] = []
    rejections = 0
    while len(kept) < n_target:
        candidate = haar_state(dim, rng)
        power = tensor_power(candidate, copies)
        if _distinct_from_all(candidate, kept) and li_rank(powers + [power]) == len(kept) + 1:
            kept.append(candidate)
            powers.append(power)
            rejections = 0
        else:
            rejections += 1
            if rejections > MAX_REJECTIONS:
                raise RuntimeError(
                    "witness sampling stalled; generator produced "
                    f"{MAX_REJECTIONS} consecutive degenerate candidates"
                )
    if li_rank(powers) != n_target:
        raise RuntimeError("witness postcondition failed: copy products not full rank")
    return StateEnsemble.uniform(kept)


def dependence_witness(
    copies: int, dim: int, rng: np.random.Generator
) -> StateEnsemble:
    """Distinct ensemble of N = copies + dim states whose copy products are dependent.

    Takes ``dim`` random orthonormal states and adds ``copies`` normalized
    random combinations of the last two, so copies + 2 states share a plane;
    their copy products then sit in a (copies + 1)-dimensional slice and
    cannot be independent. The dependence postcondition is verified
    numerically before returning.
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    if copies < 1:
        raise ValueError("copies must be at least 1")
    n_target = copies + dim
    if dim ** copies > TENSOR_CAP:
        raise ValueError("copy products would exceed the dense tensor cap")
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(raw)
    base = [PureState(q[:, k]) for k in range(dim)]
    extras: list[PureState] = []
    rejections = 0
    while len(extras) < copies:
        a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        vec = a * base[-2].amplitudes + b * base[-1].amplitudes
        if np.linalg.norm(vec) < 1e-12:
            rejections += 1
        else:
            candidate = PureState.normalized(vec)
            if _distinct_from_all(candidate, base + extras):
                extras.append(candidate)
                rejections = 0
            else:
                rejections += 1
        if rejections > MAX_REJECTIONS:
            raise RuntimeError("witness sampling stalled on coincident combinations")
    states = base + extras
    powers = [tensor_power(s, copies) for s in states]
    if li_rank(powers) >= n_target:
        raise RuntimeError("witness postcondition failed: copy products not dependent")
    return StateEnsemble.uniform(states)


def lemma_check(
    phis: list[PureState],
    chis: list[PureState],
    phi: PureState,
    chi: PureState,
) -> bool:
    """Rank verdict for the product-extension step behind the sufficient bound.

    Premises: the left factors ``phis`` are linearly independent, the right
    factors ``chis`` are pairwise distinct, the lists have equal length, and
    ``chi`` is distinct from every right factor. Under these premises the set
    {phis[k] x chis[k]} + {phi x chi} must be linearly independent; the
    return value reports the numerical rank verdict so the claim can be
    property-tested. Violated premises raise, naming the failed premise.
    """
    phis = list(phis)
    chis = list(chis)
    if len(phis) != len(chis):
        raise ValueError("premise violated: factor lists must have equal length")
    if not is_linearly_independent(phis):
        raise ValueError("premise violated: left factors must be linearly independent")
    for j in range(len(chis)):
        for k in range(j + 1, len(chis)):
            if abs(chis[j].overlap(chis[k])) > 1.0 - DISTINCT_TOL:
                raise ValueError("premise violated: right factors must be pairwise distinct")
    if phi.dim != phis[0].dim:
        raise ValueError("premise violated: extra left factor has mismatched dimension")
    if not _distinct_from_all(chi, chis):
        raise ValueError(
            "premise violated: extra right factor must be distinct from every right factor"
        )
    products = [tensor_product(p, c) for p, c in zip(phis, chis)]
    products.append(tensor_product(phi, chi))
    return is_linearly_independent(products)
