"""Covering, selection, and packing algorithms for families of metric balls."""

from .covering import (
    BallFamily,
    EpsilonNet,
    OverlapProfile,
    QuasiRoundSet,
    Verdict,
    covering_number,
    epsilon_net_greedy,
    find_common_point,
    is_alpha_configuration,
    is_besicovitch_family,
    is_k_configuration,
    is_tau_satellite_configuration,
    overlap_profile,
    strict_net_bound,
)
from .errors import BallcoverError, DomainError, InputError, UnsupportedFeatureError
from .search import (
    CipResult,
    ConstantsRow,
    SearchConfig,
    SearchResult,
    cip_check,
    constants_markdown,
    constants_report,
    construct_strict_hadwiger,
    pack_unit_balls_radius5,
    satellite_max_search,
    search_max_besicovitch_family,
)
from .selection import (
    ChainState,
    DisjointPartition,
    SubcoverResult,
    besicovitch_cover_1d,
    cip_subcover,
    morse_partition,
    partition_into_disjoint_families,
    select_bounded_overlap_subcover,
)
from .geometry import (
    DEFAULT_TOL,
    Ball,
    Point,
    Space,
    Tangent,
    ball_volume,
    distance,
    exp_map,
    geodesic_interpolate,
    injectivity_radius,
    log_map,
    shrink_ball_toward,
    unit_ball_volume,
)

__all__ = [
    "BallcoverError",
    "DomainError",
    "InputError",
    "UnsupportedFeatureError",
    "ChainState",
    "CipResult",
    "ConstantsRow",
    "DisjointPartition",
    "SearchConfig",
    "SearchResult",
    "SubcoverResult",
    "besicovitch_cover_1d",
    "cip_check",
    "cip_subcover",
    "constants_markdown",
    "constants_report",
    "construct_strict_hadwiger",
    "morse_partition",
    "pack_unit_balls_radius5",
    "partition_into_disjoint_families",
    "satellite_max_search",
    "search_max_besicovitch_family",
    "select_bounded_overlap_subcover",
    "DEFAULT_TOL",
    "Ball",
    "BallFamily",
    "EpsilonNet",
    "OverlapProfile",
    "Point",
    "QuasiRoundSet",
    "Space",
    "Tangent",
    "Verdict",
    "ball_volume",
    "covering_number",
    "distance",
    "epsilon_net_greedy",
    "exp_map",
    "find_common_point",
    "geodesic_interpolate",
    "injectivity_radius",
    "is_alpha_configuration",
    "is_besicovitch_family",
    "is_k_configuration",
    "is_tau_satellite_configuration",
    "log_map",
    "overlap_profile",
    "shrink_ball_toward",
    "strict_net_bound",
    "unit_ball_volume",
]

__version__ = "0.1.0"
