"""mixent: entropies of weighted tensor-product mixture states.

Builds thermal reservoir states, mixes in a locally perturbed block with
scheme weights, and evaluates the relative entropy to the unperturbed product
state together with its Belavkin-Staszewski upper bound, exactly at small
site counts and through an exact classical reduction at large ones.
"""

from .entropies import (
    INFINITE,
    bs_entropy,
    energy_change,
    free_energy_gap,
    relative_entropy,
    von_neumann,
    xlogx,
)
from .errors import CapacityError, ConfigError, DomainError, RankError, ValidationError
from .linalg import (
    SpectralDecomposition,
    embed_at_site,
    kron,
    kron_power,
    matrix_function,
    spectral_decompose,
)
from .mixtures import dense_bs_bound, dense_relative_entropy, mixture_state, weighted_site_sum
from .reduction import (
    McEstimate,
    ReducedEnsemble,
    bs_enumerated,
    bs_exchangeable_exact,
    bs_monte_carlo,
    reduce_to_ensemble,
)
from .states import density_ratio, gibbs_state, perturb_unitary, require_density
from .weights import (
    RegularityReport,
    WeightScheme,
    custom,
    fixed_site,
    geometric,
    growing_window,
    regularity_diagnostics,
    row,
    triangular,
    uniform,
    window,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "CapacityError",
    "ConfigError",
    "DomainError",
    "McEstimate",
    "RankError",
    "ReducedEnsemble",
    "RegularityReport",
    "SpectralDecomposition",
    "ValidationError",
    "WeightScheme",
    "bs_entropy",
    "bs_enumerated",
    "bs_exchangeable_exact",
    "bs_monte_carlo",
    "custom",
    "dense_bs_bound",
    "dense_relative_entropy",
    "density_ratio",
    "embed_at_site",
    "energy_change",
    "fixed_site",
    "free_energy_gap",
    "geometric",
    "gibbs_state",
    "growing_window",
    "kron",
    "kron_power",
    "matrix_function",
    "mixture_state",
    "perturb_unitary",
    "reduce_to_ensemble",
    "regularity_diagnostics",
    "relative_entropy",
    "require_density",
    "row",
    "spectral_decompose",
    "triangular",
    "uniform",
    "von_neumann",
    "weighted_site_sum",
    "window",
    "xlogx",
]
