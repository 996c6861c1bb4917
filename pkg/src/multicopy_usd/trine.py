"""The trine family: planar trines, lifted trines, and multi-copy reductions.

Three copies-of-a-trine facts drive everything here: appending one more trine
copy to a lifted-trine family yields another lifted-trine family with a
stepped lift value, iterating that step from the planar set gives a closed
form for the lift after C copies, and the best zero-error success probability
of a lifted family is an explicit function of its lift. Together they reduce
every C-copy question to a three-dimensional one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .states import PureState, StateEnsemble, tensor_product

SQRT3 = math.sqrt(3.0)

#: Lift value at which the three lifted states become mutually orthogonal.
ORTHOGONAL_LIFT = 1.0 / math.sqrt(3.0)

_CONSISTENCY_TOL = 1e-10

# planar trine amplitudes in the (x, y) basis, mutual overlap -1/2
_TRINE_XY = (
    (0.0, 1.0),
    (SQRT3 / 2.0, -0.5),
    (-SQRT3 / 2.0, -0.5),
)


def trine_states() -> StateEnsemble:
    """The three coplanar qubit states at mutual overlap -1/2, uniform priors."""
    return StateEnsemble.uniform(
        PureState(np.array(amps, dtype=complex)) for amps in _TRINE_XY
    )


def lifted_trine(lift: float) -> StateEnsemble:
    """Trines raised out of the plane by the given lift, in dimension 3.

    Basis order is (x, y, z); the lift is the amplitude along z. The three
    states are linearly independent exactly when the lift is strictly inside
    (0, 1): at 0 they stay coplanar, at 1 they coincide with z.
    """
    if not 0.0 <= lift <= 1.0:
        raise ValueError("lift must lie in [0, 1]")
    planar = math.sqrt(1.0 - lift * lift)
    states = [
        PureState(np.array([planar * tx, planar * ty, lift], dtype=complex))
        for tx, ty in _TRINE_XY
    ]
    return StateEnsemble.uniform(states)


def lift_recurrence_step(lift: float) -> float:
    """Lift value after appending one more trine copy."""
    if not 0.0 <= lift <= 1.0:
        raise ValueError("lift must lie in [0, 1]")
    return math.sqrt((1.0 - lift * lift) / 2.0)


def lift_closed_form(copies: int) -> float:
    """Lift of the three-dimensional stand-in for ``copies`` trine copies.

    Solves the appended-copy recurrence from the planar start: the lift is
    sqrt((1 - (-1/2)^(copies-1)) / 3), which tends to the orthogonality point
    1/sqrt(3) as copies grow.
    """
    if copies < 1:
        raise ValueError("copies must be at least 1")
    return math.sqrt((1.0 - (-0.5) ** (copies - 1)) / 3.0)


def p_max_lifted(lift: float) -> float:
    """Best zero-error success probability for the lifted trines.

    3 * min(lift^2, (1 - lift^2) / 2): the rising branch 3*lift^2 meets the
    falling branch (3/2)(1 - lift^2) at the orthogonality point, where the
    probability reaches 1. Zero at lift 0 and 1, where the family degenerates.
    """
    if not 0.0 <= lift <= 1.0:
        raise ValueError("lift must lie in [0, 1]")
    return 3.0 * min(lift * lift, (1.0 - lift * lift) / 2.0)


def p_max_multitrine(copies: int) -> float:
    """Best zero-error success probability for ``copies`` trine copies.

    1 - 2^-copies for even counts and 1 - 2^-(copies-1) for odd counts, so an
    odd copy added to an even total buys nothing. A single copy is rejected:
    the planar set is linearly dependent and admits no zero-error strategy.
    """
    if copies < 2:
        raise ValueError("zero-error identification needs at least 2 copies")
    if copies % 2 == 0:
        return 1.0 - 2.0 ** (-copies)
    return 1.0 - 2.0 ** (-(copies - 1))


def pairwise_success(copies: int) -> float:
    """Success probability when copies are measured two at a time.

    Each pair succeeds with probability 3/4; an odd leftover copy is
    discarded. Equals the collective optimum for every copy count.
    """
    if copies < 1:
        raise ValueError("copies must be at least 1")
    return 1.0 - 0.25 ** (copies // 2)


def multitrine_representation(copies: int) -> StateEnsemble:
    """Three-dimensional ensemble with the same Gram matrix as the copy products.

    All discrimination statistics depend on states only through their
    overlaps, so this lifted family stands in for the full tensor products
    (off-diagonal overlaps (-1/2)^copies on both sides) while keeping every
    matrix 3x3 regardless of the copy count.
    """
    return lifted_trine(lift_closed_form(copies))


def symmetric_basis() -> tuple[PureState, PureState, PureState]:
    """Orthonormal basis in which the lifted trines take their cyclic form.

    The first vector is z; the other two are opposite circular combinations
    of x and y carrying fixed phases, chosen so the cyclic coefficients of
    the lifted family come out real: (lift, L, L) with L the stepped lift.
    """
    phase = cmath.exp(5j * math.pi / 6.0)
    u0 = PureState(np.array([0.0, 0.0, 1.0], dtype=complex))
    u1 = PureState(phase / math.sqrt(2.0) * np.array([1.0, 1.0j, 0.0]))
    u2 = PureState(phase.conjugate() / math.sqrt(2.0) * np.array([1.0, -1.0j, 0.0]))
    return (u0, u1, u2)


def lifted_trine_coefficients(lift: float) -> np.ndarray:
    """Cyclic-representation coefficients of the lifted trines: (lift, L, L)."""
    if not 0.0 <= lift <= 1.0:
        raise ValueError("lift must lie in [0, 1]")
    stepped = lift_recurrence_step(lift)
    return np.array([lift, stepped, stepped], dtype=complex)


@dataclass(frozen=True)
class LiftedTrineParams:
    """Lift value with its derived cyclic coefficients and optimum."""

    lift: float
    coefficients: tuple[float, float, float]
    p_max: float


def lifted_trine_params(lift: float) -> LiftedTrineParams:
    coeff = lifted_trine_coefficients(lift)
    return LiftedTrineParams(
        lift=float(lift),
        coefficients=tuple(float(c.real) for c in coeff),
        p_max=p_max_lifted(lift),
    )


@dataclass(frozen=True)
class MultiTrineParams:
    """Copy count with the reduced lift and optimum success probability."""

    copies: int
    lift: float
    p_max: float


def multitrine_params(copies: int) -> MultiTrineParams:
    """Parameters of the ``copies``-copy reduction, cross-checked on build.

    The closed-form lift is verified against iterating the recurrence from
    the planar start, and (for two or more copies) the parity formula is
    verified against the lifted-family optimum at that lift.
    """
    closed = lift_closed_form(copies)
    iterated = 0.0
    for _ in range(copies - 1):
        iterated = lift_recurrence_step(iterated)
    if abs(closed - iterated) > 1e-12:
        raise RuntimeError("lift recurrence and closed form disagree")
    p_max = p_max_multitrine(copies) if copies >= 2 else 0.0
    if abs(p_max - p_max_lifted(closed)) > 1e-12:
        raise RuntimeError("parity formula and lifted-family optimum disagree")
    return MultiTrineParams(copies=copies, lift=closed, p_max=p_max)


def append_trine_copy(lift: float) -> tuple[StateEnsemble, float]:
    """Attach one planar trine copy to each lifted state.

    The three pair states live in dimension 6 and are themselves a lifted
    trine family with the stepped lift. The rotated orthonormal frame that
    exhibits them in standard lifted form is constructed explicitly and the
    expansion is re-verified entrywise before returning; a lift of 1 is
    rejected because all three pair states would coincide up to the planar
    factor and the frame degenerates.
    """
    if not 0.0 <= lift < 1.0:
        raise ValueError("construction degenerates at lift 1")
    lifted = lifted_trine(lift)
    planar = trine_states()
    pairs = [
        tensor_product(lifted.states[j], planar.states[j]) for j in range(3)
    ]
    stepped = lift_recurrence_step(lift)

    frame_x, frame_y, frame_z = _doubled_frame(lift)
    residual = math.sqrt(1.0 - stepped * stepped)
    expected = (
        stepped * frame_z + residual * frame_y,
        stepped * frame_z + 0.5 * residual * (-frame_y + SQRT3 * frame_x),
        stepped * frame_z - 0.5 * residual * (frame_y + SQRT3 * frame_x),
    )
    for pair, want in zip(pairs, expected):
        if np.max(np.abs(pair.amplitudes - want)) > _CONSISTENCY_TOL:
            raise RuntimeError("pair states do not match their lifted-form expansion")
    return StateEnsemble.uniform(pairs), stepped


def _doubled_frame(lift: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Orthonormal frame of the pair space aligned with the doubled trines."""

    def unit6(i3: int, i2: int) -> np.ndarray:
        vec = np.zeros(6, dtype=complex)
        vec[2 * i3 + i2] = 1.0
        return vec

    planar = math.sqrt(1.0 - lift * lift)
    prefactor = math.sqrt(2.0 / (1.0 + lift * lift))
    frame_x = prefactor * (
        lift * unit6(2, 0) - 0.5 * planar * (unit6(0, 1) + unit6(1, 0))
    )
    frame_y = prefactor * (
        lift * unit6(2, 1) - 0.5 * planar * (unit6(0, 0) - unit6(1, 1))
    )
    frame_z = (unit6(0, 0) + unit6(1, 1)) / math.sqrt(2.0)
    frame = np.vstack([frame_x, frame_y, frame_z])
    if np.max(np.abs(frame.conj() @ frame.T - np.eye(3))) > _CONSISTENCY_TOL:
        raise RuntimeError("doubled frame lost orthonormality")
    return frame_x, frame_y, frame_z


def lifted_curve(points: int = 201) -> tuple[np.ndarray, np.ndarray]:
    """Optimum success probability sampled over a lift grid on [0, 1].

    The grid is uniform except that the point nearest the orthogonality lift
    is pinned to it exactly, so the unit-probability peak appears in the
    sampled data rather than falling between grid points.
    """
    if points < 2:
        raise ValueError("need at least 2 grid points")
    grid = np.linspace(0.0, 1.0, points)
    grid[int(np.argmin(np.abs(grid - ORTHOGONAL_LIFT)))] = ORTHOGONAL_LIFT
    values = np.array([p_max_lifted(lift) for lift in grid])
    return grid, values


def trine_table(max_copies: int) -> list[tuple[int, float, float, float]]:
    """Rows (copies, lift, collective optimum, pairwise success) for 1..max_copies.

    The single-copy row carries probability 0: the planar set admits no
    zero-error measurement.
    """
    if max_copies < 2:
        raise ValueError("max_copies must be at least 2")
    rows = []
    for copies in range(1, max_copies + 1):
        params = multitrine_params(copies)
        rows.append((copies, params.lift, params.p_max, pairwise_success(copies)))
    return rows
