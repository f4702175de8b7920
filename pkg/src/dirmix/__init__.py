"""dirmix: exact moments of Dirichlet-weighted sums and their identities.

The package computes exact rational moments of S = sum_i R_i X_i for a
Dirichlet weight vector R (uniform spacings in the flat case) and bounded
catalog components X_i, verifies the arcsin -> power-semicircle and
generalized-arcsin -> Beta closed forms as exact identities, inverts the
moment map to recover and identify the component law, and cross-validates
everything with a seeded Monte Carlo harness.
"""

from .rationals import Rational, as_rational, format_rational, parse_rational
from .combinatorics import (
    binomial,
    composition_count,
    compositions,
    distinct_arrangements,
    multinomial,
    partitions,
    pochhammer,
)
from .catalog import (
    Arcsin,
    Beta4,
    Distribution,
    GenArcsin,
    MomentSequence,
    PointMass,
    PowerSemicircle,
    Uniform,
    UnsupportedOperationError,
    moment_sequence,
    parse_distribution,
)
from .mixture import (
    Counterexample,
    DirichletWeights,
    VerificationResult,
    affine_moments,
    verify_arcsin_semicircle,
    verify_genarcsin_beta,
    verify_vandermonde,
    verify_vandermonde_halves,
    weighted_sum_moment,
    weighted_sum_moment_general,
    weighted_sum_moments,
)
from .characterize import (
    HausdorffCheck,
    IdentificationReport,
    default_candidates,
    hausdorff_valid,
    identify,
    recover_component_moments,
    unit_standardized,
)
from .montecarlo import (
    KS_CRITICAL_COEFF_1PCT,
    MomentCheck,
    RngStream,
    SimReport,
    ks_statistic,
    sample_spacings,
    sample_variates,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "binomial",
    "multinomial",
    "pochhammer",
    "compositions",
    "composition_count",
    "partitions",
    "distinct_arrangements",
    "Distribution",
    "Arcsin",
    "GenArcsin",
    "PowerSemicircle",
    "Beta4",
    "Uniform",
    "PointMass",
    "MomentSequence",
    "moment_sequence",
    "parse_distribution",
    "UnsupportedOperationError",
    "DirichletWeights",
    "weighted_sum_moment",
    "weighted_sum_moment_general",
    "weighted_sum_moments",
    "affine_moments",
    "VerificationResult",
    "Counterexample",
    "verify_vandermonde",
    "verify_vandermonde_halves",
    "verify_arcsin_semicircle",
    "verify_genarcsin_beta",
    "recover_component_moments",
    "unit_standardized",
    "hausdorff_valid",
    "HausdorffCheck",
    "identify",
    "IdentificationReport",
    "default_candidates",
    "RngStream",
    "sample_spacings",
    "sample_variates",
    "ks_statistic",
    "simulate",
    "SimReport",
    "MomentCheck",
    "KS_CRITICAL_COEFF_1PCT",
]
