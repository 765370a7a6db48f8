"""Certified evaluation of convergent partition series.

The general series computes p_r(n) for r = 0..4: overpartitions (r = 0),
ordinary partitions (r = 1), partitions without repeated odd parts
(r = 2), and the next two members of the family.  Exact integer oracles,
Ford circle geometry, and modular transformation checks back the
floating evaluation; every rounded value carries a residual certificate.
"""

from .exact import (
    ExactRootOfUnity,
    FareyFraction,
    HjNotFoundError,
    compute_Hj,
    dedekind_sum,
    dedekind_sum_direct,
    farey_neighbors,
    farey_sequence,
    omega,
    omega_ratio,
)
from .modular import (
    ArcEndpoints,
    FordCircle,
    arc_endpoints,
    ford_circle,
    tangency_gap,
    verify_f_transformation,
    verify_fr_transformation,
)
from .oracle import (
    CoefficientTable,
    enumerate_pr,
    euler_pentagonal_p,
    expand_fr,
    gauss_square_check,
    gauss_triangular_check,
    pentagonal_check,
    reciprocal_series,
)
from .series import (
    SeriesParams,
    SeriesResult,
    akn_sum,
    bessel_i_3_2,
    hr_asymptotic,
    p_r_series,
    p_rademacher,
    pbar_zuckerman,
    pod_series,
    sinh_term_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "ArcEndpoints",
    "CoefficientTable",
    "ExactRootOfUnity",
    "FareyFraction",
    "FordCircle",
    "HjNotFoundError",
    "SeriesParams",
    "SeriesResult",
    "akn_sum",
    "arc_endpoints",
    "bessel_i_3_2",
    "compute_Hj",
    "dedekind_sum",
    "dedekind_sum_direct",
    "enumerate_pr",
    "euler_pentagonal_p",
    "expand_fr",
    "farey_neighbors",
    "farey_sequence",
    "ford_circle",
    "gauss_square_check",
    "gauss_triangular_check",
    "hr_asymptotic",
    "omega",
    "omega_ratio",
    "p_r_series",
    "p_rademacher",
    "pbar_zuckerman",
    "pentagonal_check",
    "pod_series",
    "reciprocal_series",
    "sinh_term_derivative",
    "tangency_gap",
    "verify_f_transformation",
    "verify_fr_transformation",
]
