"""Borel orbits on square-zero upper-triangular matrices and on products of
two Grassmannians, with exact cross-checks between the two settings."""

from .checks import CHECKS, CheckConfig, CheckReport, run_check
from .grassmann import (
    Color,
    Coloring,
    ConsistentInvolution,
    Partition,
    bitstring_from_partition,
    codimension_d,
    coloring,
    covering_comparison,
    enumerate_consistent,
    max_orbit_involution,
    min_orbit_involution,
    partition_from_bitstring,
    restricted_leq,
    restricted_rank_table,
    verify_restriction_theorem,
)
from .involutions import (
    ArcDiagram,
    HalflinePolicy,
    Involution,
    RankTable,
    arc_diagram,
    bruhat_leq,
    crossing_count,
    enumerate_involutions,
    involution_from_rank_table,
    melnikov_leq,
    orbit_dimension,
    rank_table,
)
from .linalg import (
    RationalMatrix,
    SlicePoint,
    Subspace,
    canonical_pair,
    conjugate,
    identify_orbit,
    is_square_zero,
    random_borel,
    schubert_profile,
    slice_embed,
    slice_subspaces,
    southwest_rank_table,
    strict_upper_from_involution,
)
from .poset import Poset, build_poset, export_dot, export_json, hasse, parse_json

__version__ = "0.1.0"
