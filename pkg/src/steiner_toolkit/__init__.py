"""
Steiner Toolkit - exact Steiner distances and Steiner k-diameters of small graphs.

## Steiner distances and derived indices:

    >>> from steiner_toolkit import build_graph, steiner_distance, steiner_profile
    >>>
    >>> c6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
    >>> steiner_distance(c6, {0, 1, 3}).value
    3
    >>> steiner_profile(c6, 4).diameter
    4

## Characterizations of the Steiner 4-diameter:

    >>> from steiner_toolkit import classify, decode_graph6
    >>>
    >>> record = classify(decode_graph6("Dhc"))  # the 5-cycle
    >>> record.sdiam4, record.thm2_verdict, record.consistent
    (3, True, True)

## Extremal families:

    >>> from steiner_toolkit import Family, FamilyParams, generate
    >>>
    >>> tree = generate(FamilyParams(Family.T, n=6))  # the path P6
"""

from .characterization import (
    ClassificationRecord,
    H3Attachment,
    SdiamFourVerdict,
    classify,
    corollary1_holds,
    lemma2_holds,
    predicate_sdiam4_is_3,
    predicate_sdiam4_is_4,
    predicate_sdiam_k_is_nminus1,
    spanning_h1,
    spanning_h2,
    spanning_h3,
    spanning_h4,
)
from .config import Config
from .exceptions import (
    DisconnectedGraphError,
    FamilyParameterError,
    Graph6DecodeError,
    GraphError,
    GraphOrderError,
    OracleLimitError,
    SteinerToolkitError,
    SubsetSizeError,
    VertexRangeError,
)
from .families import Family, FamilyParams, generate, generate_sweep, is_tree_with_at_most_4_leaves
from .formats import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .graph import (
    Graph,
    build_graph,
    circumference,
    complement,
    contains_c4_subgraph,
    is_connected,
    non_cut_vertices,
    random_connected_graph,
)
from .metrics import (
    SteinerProfile,
    average_steiner_distance,
    classical_wiener_index,
    steiner_diameter,
    steiner_eccentricity,
    steiner_profile,
    steiner_wiener_index,
)
from .steiner import (
    SteinerDistanceResult,
    steiner_distance,
    steiner_distance_oracle,
    steiner_distance_table,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationRecord",
    "Config",
    "DisconnectedGraphError",
    "Family",
    "FamilyParameterError",
    "FamilyParams",
    "Graph",
    "Graph6DecodeError",
    "GraphError",
    "GraphOrderError",
    "H3Attachment",
    "OracleLimitError",
    "SdiamFourVerdict",
    "SteinerDistanceResult",
    "SteinerProfile",
    "SteinerToolkitError",
    "SubsetSizeError",
    "VertexRangeError",
    "average_steiner_distance",
    "build_graph",
    "circumference",
    "classical_wiener_index",
    "classify",
    "complement",
    "contains_c4_subgraph",
    "corollary1_holds",
    "decode_graph6",
    "encode_graph6",
    "format_edge_list",
    "generate",
    "generate_sweep",
    "is_connected",
    "is_tree_with_at_most_4_leaves",
    "lemma2_holds",
    "non_cut_vertices",
    "parse_edge_list",
    "predicate_sdiam4_is_3",
    "predicate_sdiam4_is_4",
    "predicate_sdiam_k_is_nminus1",
    "random_connected_graph",
    "spanning_h1",
    "spanning_h2",
    "spanning_h3",
    "spanning_h4",
    "steiner_diameter",
    "steiner_distance",
    "steiner_distance_oracle",
    "steiner_distance_table",
    "steiner_eccentricity",
    "steiner_profile",
    "steiner_wiener_index",
]
