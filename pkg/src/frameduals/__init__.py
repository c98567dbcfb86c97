"""Dual frames that minimise reconstruction error under probabilistic erasures."""

from .construct import (
    EXAMPLE_IDS,
    ConstructionReport,
    named_example,
    prob_equal_norm_parseval,
    random_dual,
    random_frame,
    random_tight_frame,
    random_unitary,
    random_weights,
)
from .erasure import (
    MeasureReport,
    MeasureSpec,
    ProbabilitySequence,
    WeightSequence,
    error_operator,
    lipschitz_bound,
    max_measure,
    measure_for_set,
    pointwise_terms,
    probabilities_from_weights,
    weights_from_probabilities,
)
from .errors import *  # noqa: F401,F403
from .frameio import load_frame_file, save_frame_file
from .frames import (
    DualPair,
    DualParameterization,
    Frame,
    FrameBounds,
    apply_unitary,
    canonical_dual,
    dual_space_basis,
    frame_bounds,
    frame_distance,
    frame_operator,
    is_dual_pair,
    solve_inner_products,
)
from .optimal import (
    OptimalityCertificate,
    OptimizationConfig,
    OptimizationResult,
    certify_canonical,
    cross_measure_report,
    optimize_dual,
    pair_optimality,
    perturbation_family,
    perturbation_radius,
    s_half_transfer_check,
)
from .simulate import SimConfig, SimReport, run_simulation

__version__ = "0.1.0"
