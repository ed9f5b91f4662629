"""Perron-vector efficiency analysis and constructive extensions of reciprocal matrices."""

from .char4 import Char4Witness, characterize_4x4, subvector_guarantee_4x4
from .efficiency import (
    EfficiencyReport,
    InducedDigraph,
    efficiency_oracle,
    induced_digraph,
    is_efficient,
    subvector_efficiency_profile,
)
from .extension import (
    ExtensionResult,
    border_constant_column,
    extend_constant_row_sums,
    extend_efficient,
    extend_inefficient,
    extend_with_perron,
)
from .generators import (
    block_double,
    bordered_growth,
    bozoki,
    random_consistent,
    random_reciprocal,
    toeplitz_alt,
)
from .matrix import (
    ReciprocalMatrix,
    RowSumProfile,
    SimilarityTransform,
    consistent_from_weights,
    is_consistent,
    monomial_similarity,
    principal_submatrix,
    row_sums,
    validate,
)
from .spectral import PerronResult, geometric_mean_vector, perron, to_constant_row_sums
from .survey import SurveyConfig, SurveyRow, run_survey, run_theorem_sweep
from .wellbehaved import Kind, WellBehavedClass, classify, closed_form_root, f_eval, solve_f

__all__ = [name for name in dir() if not name.startswith("_")]
