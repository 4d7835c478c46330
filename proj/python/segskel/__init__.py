"""Proximity graphs for planar segment sets: beta-skeletons (lune- and
circle-based), Gabriel graphs, and segment Delaunay graphs, with witness
generator positions per edge and a brute-force oracle for verification."""

from ._segskel import (
    __version__,
    beta_skeleton,
    delaunay_graph,
    delta_of_beta,
    gg_graph,
    neighborhood_contains,
    oracle_edge,
    oracle_skeleton,
    point_skeleton,
    segment_intersects_neighborhood,
    validate_general_position,
)

__all__ = [
    "__version__",
    "beta_skeleton",
    "delaunay_graph",
    "delta_of_beta",
    "gg_graph",
    "neighborhood_contains",
    "oracle_edge",
    "oracle_skeleton",
    "point_skeleton",
    "segment_intersects_neighborhood",
    "validate_general_position",
]
