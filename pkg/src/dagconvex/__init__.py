"""Convex and connected convex vertex sets of acyclic digraphs.

The package enumerates and counts the sets, builds the digraph families
whose average convex-set size grows like the square root of the order, and
checks the structural guarantees (extension vertices, non-cut endpoints,
per-size lower bounds) on arbitrary connected DAGs.
"""

from .core import (
    Digraph,
    VertexSet,
    build_digraph,
    is_cut_vertex,
    is_underlying_connected,
    reachable_from,
    reaching_to,
    sources_and_sinks,
)
from .convexity import (
    ConvexityWitness,
    convex_hull,
    convexity_witness,
    find_extension_vertex,
    find_non_cut_endpoints,
    is_convex,
)
from .enumeration import (
    BRUTE_SIZE_CAP,
    CONNECTED_CONVEX,
    CONVEX,
    EXTENSION_SIZE_CAP,
    EnumerationReport,
    SizeBoundTable,
    Statistics,
    count_cc_within,
    enumerate_brute,
    enumerate_cc_extension,
    format_fraction,
    report_from_json,
    report_to_csv,
    report_to_json,
    statistics,
    verify_size_lower_bound,
)
from .families import (
    FamilySpec,
    closed_form_gi_counts,
    closed_form_path_counts,
    dt_middle_vertices,
    dt_order,
    dt_width,
    gen_dt,
    gen_gi,
    gen_path,
    gen_random_connected_dag,
)
from .io import digraph_to_edge_list, load_digraph, parse_dot, parse_edge_list, write_edge_list
from .errors import (
    CycleDetected,
    DagConvexError,
    DisconnectedInput,
    EmptyReport,
    EmptySet,
    FullSet,
    InvalidArc,
    InvalidParameter,
    NotConnectedConvex,
    OrderTooLarge,
    OrderTooSmall,
    ParseError,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "VertexSet",
    "build_digraph",
    "reachable_from",
    "reaching_to",
    "is_underlying_connected",
    "sources_and_sinks",
    "is_cut_vertex",
    "ConvexityWitness",
    "is_convex",
    "convexity_witness",
    "convex_hull",
    "find_extension_vertex",
    "find_non_cut_endpoints",
    "CONVEX",
    "CONNECTED_CONVEX",
    "BRUTE_SIZE_CAP",
    "EXTENSION_SIZE_CAP",
    "EnumerationReport",
    "Statistics",
    "SizeBoundTable",
    "enumerate_brute",
    "enumerate_cc_extension",
    "count_cc_within",
    "statistics",
    "verify_size_lower_bound",
    "format_fraction",
    "report_to_json",
    "report_from_json",
    "report_to_csv",
    "FamilySpec",
    "gen_dt",
    "gen_gi",
    "gen_path",
    "gen_random_connected_dag",
    "dt_width",
    "dt_order",
    "dt_middle_vertices",
    "closed_form_gi_counts",
    "closed_form_path_counts",
    "write_edge_list",
    "digraph_to_edge_list",
    "parse_edge_list",
    "parse_dot",
    "load_digraph",
    "DagConvexError",
    "InvalidArc",
    "CycleDetected",
    "InvalidParameter",
    "EmptySet",
    "FullSet",
    "NotConnectedConvex",
    "DisconnectedInput",
    "OrderTooSmall",
    "OrderTooLarge",
    "EmptyReport",
    "ParseError",
]
