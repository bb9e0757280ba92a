"""Minimum-distance density estimation toolkit.

Learning Gaussians and Gaussian mixtures in L1 / total-variation distance:
density types and distance oracles, Scheffé / Yatracos set machinery,
tournament and minimum-distance selection over finite candidate lists, the
exhaustive-coloring mixture learner, distribution compression schemes, and
Fano-style minimax lower-bound constructions.
"""

__version__ = "0.1.0"

from .densities import (
    Gaussian1D,
    GaussianND,
    Mixture,
    PiecewisePolyDensity,
    Sample,
    density_from_dict,
    density_to_dict,
    kl_gaussians,
    l1_monte_carlo,
    l1_quadrature_1d,
    pdf_eval,
    sample,
    tv_identity_cov,
)
from .setsystems import (
    IntervalUnion,
    SetOracle,
    SetSystem,
    IntervalUnionSystem,
    a_distance,
    empirical_measure,
    measure_of,
    scheffe_intervals_1d,
    scheffe_set,
    vc_dimension_bruteforce,
    yatracos_systems,
)
from .selection import (
    CandidateList,
    SelectionReport,
    YatracosScorer,
    agnostic_gap,
    scheffe_tournament,
    tournament_sample_size,
    yatracos_minimizer,
)
from .mixtures import (
    BaseLearner,
    Coloring,
    WeightGrid,
    enumerate_colorings,
    gaussian_base_learner,
    generate_candidates,
    learn_mixture,
    ml_fit_gaussian,
    mixture_sample_complexity,
    weight_grid,
)
from .compression import (
    Encoding,
    Scheme,
    SchemeParams,
    compression_learner,
    compression_sample_complexity,
    decode_gaussian_1d,
    encode_gaussian_1d,
    gaussian_1d_scheme,
    highdim_gaussian_params,
    mixture_scheme,
    product_scheme,
)
from .pwpoly import approx_mixture_pwpoly, pwpoly_l1, taylor_approx_gaussian
from .lowerbounds import (
    BinaryCode,
    FanoInstance,
    HardFamily,
    covariance_packing_family,
    fano_bound,
    gv_greedy_code,
    mean_packing_family,
    sample_complexity_floor,
    shifted_normal_l1_check,
)
