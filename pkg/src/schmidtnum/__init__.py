"""Rank-based Schmidt-number bounds for low-rank bipartite mixed states."""

from .bounds import (
    BoundReport,
    SubspaceBasis,
    analyze,
    assemble_T1,
    assemble_T2,
    hermitian_form_matrix,
    locc_conversion_excluded,
    oracle_LA_from_density,
    oracle_LB_from_density,
    schmidt_number_lower_bound,
    schmidt_number_upper_bound,
    subspace_LA,
    subspace_LB,
)
from .errors import InvalidInputError, NotDecidableError, RegimeError, StateFormatError
from .generic import (
    SamplerConfig,
    TrialSummary,
    monte_carlo_theorem2,
    sample_generic_state,
    theorem2_bound,
    theorem2_trial,
)
from .linalg import DEFAULT_TOL, ToleranceConfig
from .schmidt import SchmidtDecomposition, reduced_density_A, schmidt_decomposition, schmidt_rank
from .states import (
    DensityMatrix,
    PureState,
    WeightedEnsemble,
    ensemble_to_density,
    local_unitary_transform,
    partial_transpose,
    remix_ensemble,
    spectral_ensemble,
)

__version__ = "0.1.0"
