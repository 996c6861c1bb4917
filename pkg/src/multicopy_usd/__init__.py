"""Zero-error identification of linearly dependent pure states from multiple copies."""

from .states import (
    DEFAULT_RANK_TOL,
    DISTINCT_TOL,
    TENSOR_CAP,
    GramMatrix,
    PureState,
    StateEnsemble,
    gram,
    is_linearly_independent,
    li_rank,
    reciprocal_states,
    sym_dim,
    tensor_power,
    tensor_product,
)
from .bounds import (
    Feasibility,
    FeasibilityVerdict,
    achievability_witness,
    classify,
    dependence_witness,
    haar_state,
    lemma_check,
    necessary_max,
    sufficient_max,
)
from .discrimination import (
    Povm,
    PovmReport,
    SymmetricEnsemble,
    has_circulant_gram,
    max_uniform_success,
    p_max_symmetric,
    symmetric_from_coefficients,
    usd_povm,
    verify_povm,
)
from .trine import (
    ORTHOGONAL_LIFT,
    LiftedTrineParams,
    MultiTrineParams,
    append_trine_copy,
    lift_closed_form,
    lift_recurrence_step,
    lifted_curve,
    lifted_trine,
    lifted_trine_coefficients,
    lifted_trine_params,
    multitrine_params,
    multitrine_representation,
    p_max_lifted,
    p_max_multitrine,
    pairwise_success,
    symmetric_basis,
    trine_states,
    trine_table,
)
from .simulate import (
    DiscriminationOutcome,
    TrialStats,
    pairwise_strategy,
    run_trials,
    sample_outcome,
    strategy_report,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_RANK_TOL",
    "DISTINCT_TOL",
    "TENSOR_CAP",
    "ORTHOGONAL_LIFT",
    "PureState",
    "StateEnsemble",
    "GramMatrix",
    "gram",
    "tensor_power",
    "tensor_product",
    "li_rank",
    "is_linearly_independent",
    "sym_dim",
    "reciprocal_states",
    "Feasibility",
    "FeasibilityVerdict",
    "necessary_max",
    "sufficient_max",
    "classify",
    "achievability_witness",
    "dependence_witness",
    "lemma_check",
    "haar_state",
    "SymmetricEnsemble",
    "symmetric_from_coefficients",
    "p_max_symmetric",
    "Povm",
    "PovmReport",
    "usd_povm",
    "verify_povm",
    "max_uniform_success",
    "has_circulant_gram",
    "LiftedTrineParams",
    "MultiTrineParams",
    "trine_states",
    "lifted_trine",
    "append_trine_copy",
    "lift_recurrence_step",
    "lift_closed_form",
    "p_max_lifted",
    "p_max_multitrine",
    "pairwise_success",
    "multitrine_representation",
    "multitrine_params",
    "lifted_trine_params",
    "lifted_trine_coefficients",
    "symmetric_basis",
    "lifted_curve",
    "trine_table",
    "DiscriminationOutcome",
    "TrialStats",
    "sample_outcome",
    "run_trials",
    "pairwise_strategy",
    "strategy_report",
    "__version__",
]
