"""Once-punctured torus geometry in half-trace coordinates."""
from apps.core.torus.fricke import (
    CUSP_RESIDUAL_TOL,
    complete_triple,
    cusp_relation_residual,
    is_cusped,
    is_normalized,
    markov_move,
    modular_torus,
    normalize,
    s1_triple,
    twist_roots_are_double,
)
from apps.core.torus.models import (
    BASE_SLOPES,
    CrossingPair,
    DegenerateSurfaceError,
    GeodesicInfo,
    InvalidSlopeError,
    NoCuspedTorusError,
    OracleError,
    Slope,
    SlopeLike,
    TraceTriple,
    TripleNotNormalizedError,
    coerce_slope,
)
from apps.core.torus.oracle import (
    holonomy_generators,
    matrix_oracle_halftrace,
    matrix_oracle_length,
    word_matrix,
    word_matrix_for,
)
from apps.core.torus.slopes import farey_neighbors, flip_slope, halftrace_of_slope, intersection_number
from apps.core.torus.spectrum import (
    crossing_pairs,
    enumerate_geodesics,
    length_spectrum,
    pairs_with_intersection,
    shortest_crossing_pair,
)
from apps.core.torus.twist import (
    min_two_crossing_partner,
    two_crossing_partner_halftrace,
    two_crossing_partner_via_polygons,
)

__all__ = [
    "CUSP_RESIDUAL_TOL",
    "complete_triple",
    "cusp_relation_residual",
    "is_cusped",
    "is_normalized",
    "markov_move",
    "modular_torus",
    "normalize",
    "s1_triple",
    "twist_roots_are_double",
    "BASE_SLOPES",
    "CrossingPair",
    "DegenerateSurfaceError",
    "GeodesicInfo",
    "InvalidSlopeError",
    "NoCuspedTorusError",
    "OracleError",
    "Slope",
    "SlopeLike",
    "TraceTriple",
    "TripleNotNormalizedError",
    "coerce_slope",
    "holonomy_generators",
    "matrix_oracle_halftrace",
    "matrix_oracle_length",
    "word_matrix",
    "word_matrix_for",
    "farey_neighbors",
    "flip_slope",
    "halftrace_of_slope",
    "intersection_number",
    "crossing_pairs",
    "enumerate_geodesics",
    "length_spectrum",
    "pairs_with_intersection",
    "shortest_crossing_pair",
    "min_two_crossing_partner",
    "two_crossing_partner_halftrace",
    "two_crossing_partner_via_polygons",
]
