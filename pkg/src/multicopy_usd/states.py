"""Pure states, ensembles, Gram matrices, and linear-independence tools.

Everything here is deterministic complex linear algebra on dense vectors:
tensor powers, overlap matrices, numerical rank, symmetric-subspace counting,
and reciprocal (dual) bases. All values are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

#: Largest dense vector length a tensor power may produce.
TENSOR_CAP = 1 << 24

#: Relative singular-value cutoff used for all rank decisions.
DEFAULT_RANK_TOL = 1e-10

#: Unit-norm / probability-sum tolerance.
NORM_TOL = 1e-12

#: Two states are treated as distinct when |<a|b>| <= 1 - DISTINCT_TOL.
DISTINCT_TOL = 1e-8

_HERMITIAN_TOL = 1e-10
_PSD_TOL = 1e-10


def _readonly(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """A unit-norm complex amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size < 1:
            raise ValueError("a state needs at least one amplitude")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"amplitudes must have unit norm, got {norm!r}")
        object.__setattr__(self, "amplitudes", _readonly(amps, complex))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        """Build a state from an unnormalized amplitude vector."""
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(amps / norm)

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "PureState":
        """Computational basis vector |index> in the given dimension."""
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    def overlap(self, other: "PureState") -> complex:
        """Inner product <self|other>."""
        if other.dim != self.dim:
            raise ValueError("states must share one dimension")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "amplitudes": [[z.real, z.imag] for z in self.amplitudes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PureState":
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        if amps.size != data["dim"]:
            raise ValueError("amplitude count does not match dim")
        return cls(amps)


@dataclass(frozen=True, eq=False)
class StateEnsemble:
    """Pure states of a common dimension together with prior probabilities."""

    states: tuple[PureState, ...]
    priors: np.ndarray

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("ensemble needs at least one state")
        dim = states[0].dim
        if any(s.dim != dim for s in states):
            raise ValueError("all states must share one dimension")
        priors = np.asarray(self.priors, dtype=float).reshape(-1)
        if priors.size != len(states):
            raise ValueError("need one prior per state")
        if np.any(priors < 0.0):
            raise ValueError("priors must be nonnegative")
        if abs(priors.sum() - 1.0) > NORM_TOL:
            raise ValueError(f"priors must sum to 1, got {priors.sum()!r}")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "priors", _readonly(priors, float))

    @classmethod
    def uniform(cls, states: Iterable[PureState]) -> "StateEnsemble":
        states = tuple(states)
        return cls(states, np.full(len(states), 1.0 / len(states)))

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def amplitude_matrix(self) -> np.ndarray:
        """States stacked as rows, shape (n_states, dim)."""
        return np.vstack([s.amplitudes for s in self.states])

    def is_distinct(self, tol: float = DISTINCT_TOL) -> bool:
        """True when every pair of states has overlap magnitude below 1."""
        for j in range(self.n_states):
            for k in range(j + 1, self.n_states):
                if abs(self.states[j].overlap(self.states[k])) > 1.0 - tol:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "n_states": self.n_states,
            "dim": self.dim,
            "priors": [float(p) for p in self.priors],
            "states": [s.to_json() for s in self.states],
        }


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Matrix of pairwise overlaps <psi_j|psi_k> for a set of unit states."""

    entries: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.entries, dtype=complex)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError("Gram matrix must be square")
        if np.max(np.abs(g - g.conj().T)) > _HERMITIAN_TOL:
            raise ValueError("Gram matrix must be Hermitian")
        if np.max(np.abs(np.diagonal(g) - 1.0)) > _HERMITIAN_TOL:
            raise ValueError("Gram matrix must have unit diagonal")
        if np.linalg.eigvalsh(g)[0] < -_PSD_TOL:
            raise ValueError("Gram matrix must be positive semidefinite")
        object.__setattr__(self, "entries", _readonly(g, complex))

    @property
    def n_states(self) -> int:
        return self.entries.shape[0]

    def rank(self, tol: float = DEFAULT_RANK_TOL) -> int:
        """Count of eigenvalues exceeding ``tol`` times the largest one."""
        if tol <= 0.0:
            raise ValueError("tol must be positive")
        eigs = np.linalg.eigvalsh(self.entries)
        return int(np.count_nonzero(eigs > tol * eigs[-1]))


StatesLike = Union[StateEnsemble, Sequence[PureState]]


def _state_list(states: StatesLike) -> list[PureState]:
    if isinstance(states, StateEnsemble):
        return list(states.states)
    out = list(states)
    if not out:
        raise ValueError("need at least one state")
    dim = out[0].dim
    if any(s.dim != dim for s in out):
        raise ValueError("all states must share one dimension")
    return out


def tensor_power(state: PureState, copies: int) -> PureState:
    """The ``copies``-fold tensor product of ``state`` with itself.

    The amplitude at multi-index (i_1, ..., i_C) is the product of the
    single-copy amplitudes, in row-major (Kronecker) ordering. Dense output
    only; dimensions beyond TENSOR_CAP are rejected.
    """
    if copies < 1:
        raise ValueError("copies must be at least 1")
    if state.dim ** copies > TENSOR_CAP:
        raise ValueError(
            f"tensor power dimension {state.dim}**{copies} exceeds cap {TENSOR_CAP}"
        )
    out = state.amplitudes
    for _ in range(copies - 1):
        out = np.kron(out, state.amplitudes)
    return PureState(out)


def tensor_product(left: PureState, right: PureState) -> PureState:
    """Tensor product of two pure states (Kronecker ordering)."""
    if left.dim * right.dim > TENSOR_CAP:
        raise ValueError("tensor product dimension exceeds cap")
    return PureState(np.kron(left.amplitudes, right.amplitudes))


def gram(states: StatesLike) -> GramMatrix:
    """Gram matrix of an ensemble or state list, entry (j, k) = <psi_j|psi_k>."""
    rows = np.vstack([s.amplitudes for s in _state_list(states)])
    return GramMatrix(rows.conj() @ rows.T)


def li_rank(states: StatesLike, tol: float = DEFAULT_RANK_TOL) -> int:
    """Numerical rank of the stacked amplitude matrix.

    A singular value counts toward the rank when it exceeds ``tol`` times the
    largest singular value.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    rows = np.vstack([s.amplitudes for s in _state_list(states)])
    svals = np.linalg.svd(rows, compute_uv=False)
    return int(np.count_nonzero(svals > tol * svals[0]))


def is_linearly_independent(states: StatesLike, tol: float = DEFAULT_RANK_TOL) -> bool:
    """True when the states have full rank."""
    return li_rank(states, tol) == len(_state_list(states))


def sym_dim(copies: int, dim: int) -> int:
    """Dimension of the permutation-symmetric subspace of ``copies`` factors.

    Exact integer arithmetic: binomial(copies + dim - 1, copies), i.e. the
    number of size-``copies`` multisets over ``dim`` symbols.
    """
    if copies < 1 or dim < 1:
        raise ValueError("copies and dim must be at least 1")
    return math.comb(copies + dim - 1, copies)


def reciprocal_states(
    states: StatesLike, tol: float = DEFAULT_RANK_TOL
) -> list[tuple[PureState, complex]]:
    """Reciprocal (dual) basis of a linearly independent state set.

    Returns one (dual state, normalization) pair per input state, where the
    dual states live in the span of the inputs and satisfy
    <dual_k|psi_j> = normalization_k * delta_jk with normalization_k != 0.
    The duals are computed by applying the inverse Gram matrix to the inputs,
    which keeps them inside the span even when the ambient dimension is
    larger, and are returned unit-normalized.
    """
    state_list = _state_list(states)
    if not is_linearly_independent(state_list, tol):
        raise ValueError(
            "reciprocal states need a linearly independent set "
            "(Gram matrix is singular beyond tolerance)"
        )
    cols = np.column_stack([s.amplitudes for s in state_list])
    g = cols.conj().T @ cols
    duals = cols @ np.linalg.solve(g, np.eye(len(state_list), dtype=complex))
    out = []
    for k, state in enumerate(state_list):
        dual = PureState.normalized(duals[:, k])
        out.append((dual, dual.overlap(state)))
    return out
