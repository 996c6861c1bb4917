"""Trine family geometry, lift recurrence, and multi-copy reductions."""

import numpy as np
import pytest

from multicopy_usd import (
    ORTHOGONAL_LIFT,
    append_trine_copy,
    gram,
    li_rank,
    lift_closed_form,
    lift_recurrence_step,
    lifted_curve,
    lifted_trine,
    lifted_trine_params,
    multitrine_params,
    multitrine_representation,
    p_max_lifted,
    p_max_multitrine,
    pairwise_success,
    symmetric_basis,
    tensor_power,
    tensor_product,
    trine_states,
    trine_table,
)


# -------------------------------------------------------------- base families


def test_trine_states_are_unit_and_evenly_spread():
    ensemble = trine_states()
    assert ensemble.dim == 2
    for s in ensemble.states:
        assert np.linalg.norm(s.amplitudes) == pytest.approx(1.0, abs=1e-15)
    off = gram(ensemble).entries[~np.eye(3, dtype=bool)]
    np.testing.assert_allclose(off, -0.5, atol=1e-15)
    assert li_rank(ensemble) == 2


def test_lifted_trine_endpoints_and_orthogonality():
    assert li_rank(lifted_trine(0.0)) == 2
    assert li_rank(lifted_trine(1.0)) == 1
    np.testing.assert_allclose(
        gram(lifted_trine(ORTHOGONAL_LIFT)).entries, np.eye(3), atol=1e-12
    )
    for lift in (0.1, 0.5, 0.9):
        assert li_rank(lifted_trine(lift)) == 3


def test_lifted_trine_rejects_out_of_range_lift():
    with pytest.raises(ValueError):
        lifted_trine(-0.1)
    with pytest.raises(ValueError):
        lifted_trine(1.1)


def test_symmetric_basis_is_orthonormal():
    rows = np.vstack([u.amplitudes for u in symmetric_basis()])
    np.testing.assert_allclose(rows.conj() @ rows.T, np.eye(3), atol=1e-15)


# -------------------------------------------------------------- copy doubling


def test_doubling_the_planar_trines_gives_the_tensor_squares():
    # at lift 0 the first factor is the planar trine embedded in dimension 3,
    # so the pair state is the tensor square padded with zero out-of-plane rows
    pairs, stepped = append_trine_copy(0.0)
    assert stepped == pytest.approx(2 ** -0.5, abs=1e-15)
    for pair, single in zip(pairs.states, trine_states().states):
        np.testing.assert_allclose(
            pair.amplitudes[:4],
            tensor_product(single, single).amplitudes,
            atol=1e-12,
        )
        np.testing.assert_allclose(pair.amplitudes[4:], 0.0, atol=1e-12)


def test_doubling_step_value():
    _, stepped = append_trine_copy(2 ** -0.5)
    assert stepped == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("lift", np.linspace(0.0, 0.95, 20))
def test_doubled_states_have_the_lifted_gram(lift):
    pairs, stepped = append_trine_copy(float(lift))
    np.testing.assert_allclose(
        gram(pairs).entries,
        gram(lifted_trine(stepped)).entries,
        atol=1e-10,
    )


def test_doubling_rejects_the_degenerate_lift():
    with pytest.raises(ValueError):
        append_trine_copy(1.0)


# ------------------------------------------------------------ lift recurrence


def test_recurrence_step_values():
    assert lift_recurrence_step(0.0) == pytest.approx(2 ** -0.5, abs=1e-15)
    assert lift_recurrence_step(1.0) == pytest.approx(0.0, abs=1e-15)
    fixed = ORTHOGONAL_LIFT
    assert lift_recurrence_step(fixed) == pytest.approx(fixed, abs=1e-15)


def test_closed_form_values():
    assert lift_closed_form(1) == 0.0
    assert lift_closed_form(2) == pytest.approx(2 ** -0.5, abs=1e-15)
    # five copies: iterate the step four times from the planar start
    iterated = 0.0
    for _ in range(4):
        iterated = lift_recurrence_step(iterated)
    assert iterated == pytest.approx(np.sqrt(5 / 16), abs=1e-15)
    assert lift_closed_form(5) == pytest.approx(iterated, abs=1e-12)


def test_recurrence_matches_closed_form_up_to_thirty_copies():
    lift = 0.0
    for copies in range(2, 31):
        lift = lift_recurrence_step(lift)
        assert abs(lift - lift_closed_form(copies)) < 1e-12
    assert abs(lift - ORTHOGONAL_LIFT) < 1e-8


# ------------------------------------------------------------------- optima


def test_p_max_lifted_endpoints_and_peak():
    assert p_max_lifted(0.0) == 0.0
    assert p_max_lifted(1.0) == 0.0
    assert p_max_lifted(ORTHOGONAL_LIFT) == pytest.approx(1.0, abs=1e-12)
    assert p_max_lifted(0.4) == pytest.approx(0.48, abs=1e-15)
    assert p_max_lifted(0.9) == pytest.approx(0.285, abs=1e-12)


def test_p_max_multitrine_values():
    assert p_max_multitrine(2) == 0.75
    assert p_max_multitrine(3) == 0.75
    assert p_max_multitrine(4) == 0.9375
    with pytest.raises(ValueError):
        p_max_multitrine(1)


def test_even_plateau_and_odd_to_even_growth():
    for copies in range(2, 29, 2):
        assert p_max_multitrine(copies) == p_max_multitrine(copies + 1)
        assert p_max_multitrine(copies + 2) > p_max_multitrine(copies + 1)


def test_optimum_chain_identity():
    for copies in range(2, 29):
        lift = lift_closed_form(copies)
        stepped = lift_closed_form(copies + 1)
        via_step = 3 * min(lift ** 2, (1 - lift ** 2) / 2)
        via_next_lift = 3 * min(lift ** 2, stepped ** 2)
        assert abs(via_step - p_max_multitrine(copies)) < 1e-12
        assert abs(via_next_lift - p_max_multitrine(copies)) < 1e-12


def test_pairwise_matches_the_collective_optimum():
    for copies in range(2, 29):
        assert abs(pairwise_success(copies) - p_max_multitrine(copies)) < 1e-12
    assert pairwise_success(1) == 0.0


# ------------------------------------------------------------- representation


def test_representation_overlaps_alternate_in_sign():
    np.testing.assert_allclose(
        gram(multitrine_representation(1)).entries[0, 1], -0.5, atol=1e-12
    )
    np.testing.assert_allclose(
        gram(multitrine_representation(2)).entries[0, 1], 0.25, atol=1e-12
    )
    np.testing.assert_allclose(
        gram(multitrine_representation(3)).entries[0, 1], -0.125, atol=1e-12
    )


@pytest.mark.parametrize("copies", [1, 2, 3, 5, 8])
def test_representation_matches_full_tensor_gram(copies):
    full = [tensor_power(s, copies) for s in trine_states().states]
    np.testing.assert_allclose(
        gram(full).entries,
        gram(multitrine_representation(copies)).entries,
        atol=1e-10,
    )


def test_multitrine_params_cross_checks():
    params = multitrine_params(4)
    assert params.lift == pytest.approx(np.sqrt(3 / 8), abs=1e-15)
    assert params.p_max == 0.9375
    assert multitrine_params(1).p_max == 0.0


def test_lifted_trine_params_fields():
    params = lifted_trine_params(0.4)
    assert params.coefficients == pytest.approx(
        (0.4, np.sqrt(0.42), np.sqrt(0.42)), abs=1e-15
    )
    assert params.p_max == pytest.approx(0.48, abs=1e-15)
    assert lifted_trine_params(ORTHOGONAL_LIFT).p_max == pytest.approx(1.0, abs=1e-12)


# ------------------------------------------------------------- curve and table


def test_lifted_curve_contains_the_exact_peak():
    grid, values = lifted_curve(201)
    assert grid.size == 201
    nearest = int(np.argmin(np.abs(grid - ORTHOGONAL_LIFT)))
    assert grid[nearest] == ORTHOGONAL_LIFT
    assert int(np.argmax(values)) == nearest
    assert abs(values[nearest] - 1.0) < 1e-12
    for lift, value in zip(grid, values):
        assert value == p_max_lifted(float(lift))


def test_lifted_curve_needs_two_points():
    with pytest.raises(ValueError):
        lifted_curve(1)


def test_trine_table_rows():
    rows = trine_table(10)
    assert rows[0] == (1, 0.0, 0.0, 0.0)
    copies, lift, p_max, pairwise = rows[1]
    assert (copies, p_max, pairwise) == (2, 0.75, 0.75)
    assert lift == pytest.approx(2 ** -0.5, abs=1e-15)
    assert rows[2][2] == 0.75
    assert rows[9][2] == 1 - 2 ** -10
    with pytest.raises(ValueError):
        trine_table(1)
