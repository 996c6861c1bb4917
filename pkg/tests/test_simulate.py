"""Monte Carlo trial behavior: determinism, zero errors, and rate agreement."""

import numpy as np
import pytest

from multicopy_usd import (
    PureState,
    StateEnsemble,
    TrialStats,
    multitrine_representation,
    p_max_multitrine,
    pairwise_strategy,
    pairwise_success,
    run_trials,
    sample_outcome,
    strategy_report,
    usd_povm,
)
from multicopy_usd.simulate import DiscriminationOutcome


def _binomial_margin(p, n, sigmas=4.0):
    return sigmas * np.sqrt(p * (1 - p) / n)


def _orthonormal_setup(dim=3):
    ensemble = StateEnsemble.uniform([PureState.basis_state(dim, k) for k in range(dim)])
    return ensemble, usd_povm(ensemble, 1.0)


# -------------------------------------------------------------- single draws


def test_projective_outcome_is_deterministic():
    ensemble, povm = _orthonormal_setup()
    rng = np.random.default_rng(0)
    for k, state in enumerate(ensemble.states):
        for _ in range(20):
            outcome = sample_outcome(povm, state, rng)
            assert outcome.index == k + 1
            assert not outcome.inconclusive


def test_orthogonal_lifted_trines_never_answer_inconclusive():
    from multicopy_usd import ORTHOGONAL_LIFT, lifted_trine

    ensemble = lifted_trine(ORTHOGONAL_LIFT)
    povm = usd_povm(ensemble, 1.0)
    rng = np.random.default_rng(1)
    draws = [sample_outcome(povm, ensemble.states[0], rng) for _ in range(200)]
    assert all(o.index == 1 for o in draws)


def test_pair_measurement_outcome_rates():
    ensemble = multitrine_representation(2)
    povm = usd_povm(ensemble, p_max_multitrine(2))
    probs = povm.born_probabilities(ensemble.states[0])
    np.testing.assert_allclose(probs, [0.75, 0.0, 0.0, 0.25], atol=1e-10)


def test_outcome_index_validation():
    with pytest.raises(ValueError):
        DiscriminationOutcome(0)


# ----------------------------------------------------------------- run_trials


def test_projective_trials_always_succeed():
    ensemble, povm = _orthonormal_setup()
    stats = run_trials(ensemble, povm, 10_000, seed=7)
    assert stats.success_rate == 1.0
    assert stats.error_count == 0
    assert stats.inconclusive_count == 0


def test_trials_are_bit_for_bit_reproducible():
    ensemble = multitrine_representation(2)
    povm = usd_povm(ensemble, p_max_multitrine(2))
    first = run_trials(ensemble, povm, 150_000, seed=123)
    second = run_trials(ensemble, povm, 150_000, seed=123)
    np.testing.assert_array_equal(first.counts, second.counts)
    third = run_trials(ensemble, povm, 150_000, seed=124)
    assert np.any(third.counts != first.counts)


def test_pair_trials_match_the_analytic_rate():
    ensemble = multitrine_representation(2)
    povm = usd_povm(ensemble, p_max_multitrine(2))
    n = 200_000
    stats = run_trials(ensemble, povm, n, seed=5150)
    assert stats.error_count == 0
    assert abs(stats.success_rate - 0.75) < _binomial_margin(0.75, n)
    assert stats.success_rate + stats.inconclusive_rate + stats.error_rate == pytest.approx(1.0)


def test_run_trials_validations():
    ensemble, povm = _orthonormal_setup()
    with pytest.raises(ValueError):
        run_trials(ensemble, povm, 0, seed=1)
    pair = multitrine_representation(2)
    with pytest.raises(ValueError):
        run_trials(pair, usd_povm(_orthonormal_setup(4)[0], 1.0), 10, seed=1)


def test_priors_drive_preparation_frequencies():
    ensemble = StateEnsemble(
        multitrine_representation(2).states, np.array([0.7, 0.2, 0.1])
    )
    povm = usd_povm(StateEnsemble.uniform(ensemble.states), p_max_multitrine(2))
    n = 100_000
    stats = run_trials(ensemble, povm, n, seed=99)
    prepared = stats.counts.sum(axis=0) / n
    for frequency, prior in zip(prepared, ensemble.priors):
        assert abs(frequency - prior) < _binomial_margin(prior, n)


# ----------------------------------------------------------------- TrialStats


def test_trial_stats_validation():
    with pytest.raises(ValueError):
        TrialStats(5, np.zeros((3, 3), dtype=np.int64))
    with pytest.raises(ValueError):
        TrialStats(5, np.zeros((4, 3), dtype=np.int64))


def test_trial_stats_error_accounting():
    counts = np.array([[10, 2, 0], [0, 11, 0], [0, 0, 12], [3, 1, 1]])
    stats = TrialStats(40, counts)
    assert stats.success_count == 33
    assert stats.error_count == 2
    assert stats.inconclusive_count == 5
    data = stats.to_json()
    assert data["error_count"] == 2
    assert data["counts"][3] == [3, 1, 1]


# ----------------------------------------------------------- pairwise strategy


def test_pairwise_equals_collective_for_one_pair():
    n = 200_000
    stats = pairwise_strategy(2, n, seed=31337)
    assert stats.error_count == 0
    assert abs(stats.success_rate - 0.75) < _binomial_margin(0.75, n)


def test_pairwise_four_copies_rate():
    n = 200_000
    stats = pairwise_strategy(4, n, seed=2718)
    want = 1 - 0.25 ** 2
    assert stats.error_count == 0
    assert abs(stats.success_rate - want) < _binomial_margin(want, n)


def test_pairwise_six_copies_matches_collective_formula():
    assert pairwise_success(6) == 1 - 0.25 ** 3
    assert pairwise_success(6) == p_max_multitrine(6)


def test_pairwise_requires_an_even_copy_count():
    with pytest.raises(ValueError):
        pairwise_strategy(3, 100, seed=0)
    with pytest.raises(ValueError):
        pairwise_strategy(0, 100, seed=0)


def test_pairwise_is_reproducible():
    first = pairwise_strategy(4, 60_000, seed=4)
    second = pairwise_strategy(4, 60_000, seed=4)
    np.testing.assert_array_equal(first.counts, second.counts)


# -------------------------------------------------------------- strategy report


def test_strategy_report_three_copies():
    data = strategy_report(3, 50_000, seed=64)
    assert data["schema"] == 1
    assert data["single_copy_success"] == 0.0
    assert data["collective"]["analytic_success"] == 0.75
    assert data["pairwise"]["analytic_success"] == 0.75
    assert data["pairwise"]["measured_copies"] == 2
    for block in (data["collective"], data["pairwise"]):
        assert block["error_count"] == 0
        assert abs(block["success_rate"] - 0.75) < _binomial_margin(0.75, 50_000)


def test_strategy_report_two_and_eight_copies():
    two = strategy_report(2, 20_000, seed=11)
    assert two["collective"]["analytic_success"] == 0.75
    assert two["pairwise"]["analytic_success"] == 0.75
    eight = strategy_report(8, 20_000, seed=12)
    want = 1 - 2.0 ** -8
    assert eight["collective"]["analytic_success"] == want
    assert eight["pairwise"]["analytic_success"] == want
    assert eight["pairwise"]["measured_copies"] == 8


def test_strategy_report_needs_two_copies():
    with pytest.raises(ValueError):
        strategy_report(1, 100, seed=0)


# ------------------------------------------------------------ probability guard


def test_born_residual_guard_trips_on_a_tight_budget():
    ensemble, povm = _orthonormal_setup()
    with pytest.raises(ValueError):
        povm.born_probabilities(ensemble.states[0], residual_tol=0.0)
