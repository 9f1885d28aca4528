"""n-TARP: thresholding after random projection.

Binary classification by projecting polynomially expanded data on n
random lines, thresholding each projection optimally, and keeping the
best of the n; plus calculators for the associated generalization-gap
bounds and the experiment harness that exercises them.
"""

from .bounds import (
    BoundConfig,
    BoundReport,
    bound_report,
    chaining_integral,
    chaining_tarp_bound,
    chaining_vc_bound,
    combined_gap_bound,
    covering_number_bound,
    crossover_n,
    hoeffding_deviation,
    max_projections_for_vc,
    ratio_limit,
    required_projections,
    tarp_expected_gap_bound,
    tarp_gap_bound,
    vc_expected_gap_bound_sauer,
    vc_gap_bound,
)
from .classifier import (
    Dataset,
    Dichotomy,
    ProjectionStump,
    TarpModel,
    best_threshold,
    dichotomy_chain,
    empirical_error,
    fit,
    load_model,
    model_error,
    predict,
    predict_many,
    sample_direction,
    save_model,
)
from .features import PolyFeatureMap, build_map, expand, expand_matrix, extended_dim
from .special import regularized_incomplete_beta

__all__ = [
    "BoundConfig",
    "BoundReport",
    "Dataset",
    "Dichotomy",
    "PolyFeatureMap",
    "ProjectionStump",
    "TarpModel",
    "best_threshold",
    "bound_report",
    "build_map",
    "chaining_integral",
    "chaining_tarp_bound",
    "chaining_vc_bound",
    "combined_gap_bound",
    "covering_number_bound",
    "crossover_n",
    "dichotomy_chain",
    "empirical_error",
    "expand",
    "expand_matrix",
    "extended_dim",
    "fit",
    "hoeffding_deviation",
    "load_model",
    "max_projections_for_vc",
    "model_error",
    "predict",
    "predict_many",
    "ratio_limit",
    "regularized_incomplete_beta",
    "required_projections",
    "sample_direction",
    "save_model",
    "tarp_expected_gap_bound",
    "tarp_gap_bound",
    "vc_expected_gap_bound_sauer",
    "vc_gap_bound",
]

__version__ = "0.1.0"
