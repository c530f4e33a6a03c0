"""Classical capacity of one-mode Gaussian quantum measurement channels."""

from .core import (
    EnergyBelowVacuum,
    EnergyConstraint,
    GausscapError,
    HeisenbergViolation,
    InvalidForSharp,
    InvalidSharp,
    MeasurementNoise,
    NegativeDensity,
    NonPositive,
    NormalizationFailure,
    NumericsError,
    OneModeCovariance,
    OutOfInterval,
    OutputGaussian,
    TruncationInsufficient,
    ValidationError,
    make_covariance,
    make_noise,
    output_density,
    output_entropy_term,
)
from .capacity import (
    CapacityResult,
    GaussianEnsembleSpec,
    Regime,
    capacity_alpha,
    capacity_energy,
    classify_regime,
    e_closure,
    ensemble_objective,
    optimal_squeezing,
    threshold_energy,
    upper_bound,
)
from .duality import (
    DualEnsemble,
    KappaMatrix,
    accessible_info_sharp_position,
    dual_ensemble,
    kappa_matrix,
)
from .fock import (
    FockOperator,
    displacement_fock,
    gaussian_state_fock,
    quantum_charfn,
)
from .grids import (
    DiscreteEnsemble,
    OutputSampler,
    QuadratureGrid,
    discretize_gaussian_ensemble,
    mutual_information,
    numeric_output_entropy,
    povm_density,
)
from .clt import clt_convergence_report, clt_marginal_charfn, gaussian_charfn
from .dualcheck import dual_operator_check
from .hgm import SearchConfig, SearchReport, hgm_search

__version__ = "0.1.0"
