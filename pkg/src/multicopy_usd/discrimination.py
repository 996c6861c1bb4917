"""Zero-error discrimination of linearly independent symmetric ensembles.

The measurement that identifies state j is built from the reciprocal basis:
each identification effect is a scaled projector onto the dual of state j, so
it never fires on any other ensemble member. The leftover inconclusive effect
absorbs the rest of the identity; feasibility of a requested success level is
exactly positivity of that leftover, which a bisection oracle probes directly
as an independent check on closed-form optima.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import (
    NORM_TOL,
    PureState,
    StateEnsemble,
    gram,
    reciprocal_states,
)

#: Smallest eigenvalue tolerated before an effect counts as indefinite.
PSD_TOL = 1e-10

#: Width at which the feasibility bisection stops.
BISECTION_TOL = 1e-8

#: Born probability vectors may miss unit sum by at most this much.
PROB_RESIDUAL_TOL = 1e-9

_COMPLETENESS_TOL = 1e-10
_ORTHONORMAL_TOL = 1e-10


def _hermitian_readonly(mat, name: str) -> np.ndarray:
    arr = np.array(mat, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square matrix")
    if np.max(np.abs(arr - arr.conj().T)) > _COMPLETENESS_TOL:
        raise ValueError(f"{name} must be Hermitian")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SymmetricEnsemble:
    """Coefficient vector plus orthonormal basis generating a cyclic state family.

    State j (j = 1..N) is the coefficient vector rotated by the j-th power of
    the diagonal phase shift: sum_k c_k exp(2 pi i j k / N) u_k. Every
    coefficient must be nonzero, otherwise some pair of states could not be
    told apart without error.
    """

    coefficients: np.ndarray
    basis: tuple[PureState, ...]

    def __post_init__(self):
        coeff = np.asarray(self.coefficients, dtype=complex).reshape(-1)
        basis = tuple(self.basis)
        if coeff.size < 1:
            raise ValueError("need at least one coefficient")
        if len(basis) != coeff.size:
            raise ValueError("need one basis state per coefficient")
        if abs(np.sum(np.abs(coeff) ** 2) - 1.0) > NORM_TOL:
            raise ValueError("coefficient magnitudes must sum to 1 in square")
        if np.any(np.abs(coeff) == 0.0):
            raise ValueError("every coefficient must be nonzero")
        rows = np.vstack([u.amplitudes for u in basis])
        overlaps = rows.conj() @ rows.T
        if np.max(np.abs(overlaps - np.eye(len(basis)))) > _ORTHONORMAL_TOL:
            raise ValueError("basis must be orthonormal")
        coeff = coeff.copy()
        coeff.setflags(write=False)
        object.__setattr__(self, "coefficients", coeff)
        object.__setattr__(self, "basis", basis)

    @property
    def n_states(self) -> int:
        return self.coefficients.size

    def realize(self) -> StateEnsemble:
        """The N generated states with uniform priors."""
        n = self.n_states
        basis_rows = np.vstack([u.amplitudes for u in self.basis])
        states = []
        for j in range(1, n + 1):
            phases = np.exp(2j * np.pi * j * np.arange(n) / n)
            states.append(PureState.normalized((self.coefficients * phases) @ basis_rows))
        return StateEnsemble.uniform(states)


def symmetric_from_coefficients(coefficients, basis=None) -> StateEnsemble:
    """Realize the cyclic family for a coefficient vector.

    ``basis`` defaults to the computational basis of matching dimension.
    """
    coeff = np.asarray(coefficients, dtype=complex).reshape(-1)
    if basis is None:
        basis = tuple(PureState.basis_state(coeff.size, k) for k in range(coeff.size))
    return SymmetricEnsemble(coeff, tuple(basis)).realize()


def p_max_symmetric(coefficients) -> float:
    """Best per-state success probability for the cyclic family.

    Equals N times the smallest squared coefficient magnitude; phases do not
    enter. Confirmed independently by ``max_uniform_success``.
    """
    coeff = np.asarray(coefficients, dtype=complex).reshape(-1)
    weights = np.abs(coeff) ** 2
    if abs(weights.sum() - 1.0) > NORM_TOL:
        raise ValueError("coefficient magnitudes must sum to 1 in square")
    if np.any(weights == 0.0):
        raise ValueError("every coefficient must be nonzero")
    return float(coeff.size * np.min(weights))


@dataclass(frozen=True, eq=False)
class Povm:
    """One identification effect per state plus the inconclusive effect.

    Effects are Hermitian and sum to the identity within tolerance by
    construction. Positivity of the inconclusive effect is deliberately NOT
    enforced here: construction at an infeasible success level produces an
    indefinite leftover, and ``verify_povm`` is the place that reports it.
    """

    effects: tuple[np.ndarray, ...]
    inconclusive: np.ndarray

    def __post_init__(self):
        effects = tuple(
            _hermitian_readonly(e, f"effect {j + 1}") for j, e in enumerate(self.effects)
        )
        if not effects:
            raise ValueError("need at least one identification effect")
        inconclusive = _hermitian_readonly(self.inconclusive, "inconclusive effect")
        dim = inconclusive.shape[0]
        if any(e.shape != (dim, dim) for e in effects):
            raise ValueError("all effects must share one dimension")
        total = sum(effects) + inconclusive
        if np.max(np.abs(total - np.eye(dim))) > _COMPLETENESS_TOL:
            raise ValueError("effects must sum to the identity")
        object.__setattr__(self, "effects", effects)
        object.__setattr__(self, "inconclusive", inconclusive)

    @property
    def dim(self) -> int:
        return self.inconclusive.shape[0]

    @property
    def n_states(self) -> int:
        return len(self.effects)

    def elements(self) -> tuple[np.ndarray, ...]:
        """All effects in outcome order: identify 1..N, then inconclusive."""
        return (*self.effects, self.inconclusive)

    def born_probabilities(
        self, state: PureState, residual_tol: float = PROB_RESIDUAL_TOL
    ) -> np.ndarray:
        """Outcome probabilities for a prepared state, in outcome order.

        Values are clipped to [0, 1] and renormalized when the clipped sum
        misses 1 by less than ``residual_tol``; a larger residual means the
        measurement itself is invalid and raises.
        """
        if state.dim != self.dim:
            raise ValueError("state and measurement dimensions differ")
        amps = state.amplitudes
        probs = np.array(
            [float(np.real(np.vdot(amps, e @ amps))) for e in self.elements()]
        )
        probs = np.clip(probs, 0.0, 1.0)
        total = probs.sum()
        if abs(total - 1.0) >= residual_tol:
            raise ValueError(
                f"outcome probabilities sum to {total!r}; measurement is not valid"
            )
        return probs / total


def usd_povm(ensemble: StateEnsemble, success) -> Povm:
    """Zero-error measurement with prescribed per-state success probabilities.

    ``success`` is a scalar or one probability per state. Effect j is the
    dual-state projector scaled so that state j fires it with exactly the
    requested probability and every other ensemble member never fires it.
    The inconclusive effect is the identity minus the rest; its positivity is
    not guaranteed and must be checked by the caller (``verify_povm``), which
    is precisely how infeasible success levels are detected.
    """
    n = ensemble.n_states
    success_vec = np.broadcast_to(np.asarray(success, dtype=float), (n,))
    if np.any(success_vec < 0.0) or np.any(success_vec > 1.0):
        raise ValueError("success probabilities must lie in [0, 1]")
    duals = reciprocal_states(ensemble)
    effects = []
    for (dual, overlap), p in zip(duals, success_vec):
        scale = p / abs(overlap) ** 2
        effects.append(scale * np.outer(dual.amplitudes, dual.amplitudes.conj()))
    leftover = np.eye(ensemble.dim, dtype=complex) - sum(effects)
    return Povm(tuple(effects), leftover)


@dataclass(frozen=True, eq=False)
class PovmReport:
    """Structural and statistical checks of a measurement against an ensemble."""

    min_eigenvalues: tuple[float, ...]
    completeness_residual: float
    error_matrix: np.ndarray
    max_error: float
    per_state_success: tuple[float, ...]
    average_success: float
    tol: float

    def __post_init__(self):
        mat = np.array(self.error_matrix, dtype=float)
        mat.setflags(write=False)
        object.__setattr__(self, "error_matrix", mat)

    @property
    def psd_ok(self) -> bool:
        return min(self.min_eigenvalues) >= -self.tol

    @property
    def zero_error_ok(self) -> bool:
        return self.max_error < self.tol

    @property
    def complete_ok(self) -> bool:
        return self.completeness_residual <= self.tol

    @property
    def passed(self) -> bool:
        return self.psd_ok and self.zero_error_ok and self.complete_ok

    def to_json(self) -> dict:
        return {
            "min_eigenvalues": [float(v) for v in self.min_eigenvalues],
            "completeness_residual": float(self.completeness_residual),
            "error_matrix": [[float(v) for v in row] for row in self.error_matrix],
            "max_error": float(self.max_error),
            "per_state_success": [float(v) for v in self.per_state_success],
            "average_success": float(self.average_success),
            "tol": float(self.tol),
            "psd_ok": self.psd_ok,
            "zero_error_ok": self.zero_error_ok,
            "complete_ok": self.complete_ok,
            "passed": self.passed,
        }


def verify_povm(povm: Povm, ensemble: StateEnsemble, tol: float = PSD_TOL) -> PovmReport:
    """Audit a measurement: positivity, completeness, and the zero-error rates.

    Never raises on a bad measurement; every verdict lands in the report.
    ``error_matrix[j, k]`` is the probability that effect j fires on prepared
    state k, so off-diagonal entries are misidentification rates.
    """
    if povm.dim != ensemble.dim:
        raise ValueError("measurement and ensemble dimensions differ")
    if povm.n_states != ensemble.n_states:
        raise ValueError("need one identification effect per ensemble state")
    min_eigs = tuple(float(np.linalg.eigvalsh(e)[0]) for e in povm.elements())
    total = sum(povm.elements())
    completeness = float(np.max(np.abs(total - np.eye(povm.dim))))
    n = ensemble.n_states
    error_matrix = np.empty((n, n))
    for j, effect in enumerate(povm.effects):
        for k, state in enumerate(ensemble.states):
            error_matrix[j, k] = float(
                np.real(np.vdot(state.amplitudes, effect @ state.amplitudes))
            )
    off_diag = error_matrix - np.diag(np.diagonal(error_matrix))
    successes = tuple(float(v) for v in np.diagonal(error_matrix))
    average = float(np.dot(ensemble.priors, np.diagonal(error_matrix)))
    return PovmReport(
        min_eigenvalues=min_eigs,
        completeness_residual=completeness,
        error_matrix=error_matrix,
        max_error=float(np.max(np.abs(off_diag))),
        per_state_success=successes,
        average_success=average,
        tol=tol,
    )


def max_uniform_success(ensemble: StateEnsemble, tol: float = BISECTION_TOL) -> float:
    """Largest common success probability with a positive inconclusive effect.

    Bisection on p in [0, 1]: a level is feasible when the measurement built
    at that level has inconclusive-effect eigenvalues above -PSD_TOL.
    Feasibility is monotone in p, so the returned value is within ``tol`` of
    the true optimum. This is the numerical oracle against which the closed
    forms are validated, so it deliberately rebuilds the measurement at every
    probe instead of reusing their algebra.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if np.max(np.abs(ensemble.priors - 1.0 / ensemble.n_states)) > NORM_TOL:
        raise ValueError("oracle assumes uniform priors")

    def feasible(p: float) -> bool:
        povm = usd_povm(ensemble, p)
        return float(np.linalg.eigvalsh(povm.inconclusive)[0]) >= -PSD_TOL

    if feasible(1.0):
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def has_circulant_gram(ensemble: StateEnsemble, tol: float = 1e-10) -> bool:
    """True when overlaps depend only on the index difference mod N.

    Necessary condition for the ensemble to admit a cyclic (symmetric)
    representation; the inverse problem of recovering coefficients from raw
    states is not attempted.
    """
    g = gram(ensemble).entries
    n = ensemble.n_states
    for j in range(n):
        for k in range(n):
            if abs(g[j, k] - g[(j + 1) % n, (k + 1) % n]) > tol:
                return False
    return True
