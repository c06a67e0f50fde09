"""Exact domination and covering numbers, and recognition of
gamma-beta-perfect graphs (every connected induced subgraph on at least two
vertices has domination number equal to covering number)."""

from .enumeration import count_connected_labeled, enumerate_connected_graphs, verify_theorem
from .exact_solvers import (
    SolverResult,
    covering_number,
    domination_number,
    independence_number,
    is_dominating_set,
    is_vertex_cover,
)
from .graph_core import (
    Graph,
    GraphError,
    connected_induced_vertex_sets,
    diameter,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_tree,
    named_graph,
    parse_graph6,
    write_graph6,
)
from .perfection import (
    Certificate,
    Verdict,
    classify_forbidden,
    classify_structural,
    find_violating_induced_subgraph,
    is_perfect_oracle,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Graph",
    "GraphError",
    "SolverResult",
    "Verdict",
    "classify_forbidden",
    "classify_structural",
    "connected_induced_vertex_sets",
    "count_connected_labeled",
    "covering_number",
    "diameter",
    "domination_number",
    "enumerate_connected_graphs",
    "find_violating_induced_subgraph",
    "graph_from_edges",
    "independence_number",
    "induced_subgraph",
    "is_connected",
    "is_dominating_set",
    "is_perfect_oracle",
    "is_tree",
    "is_vertex_cover",
    "named_graph",
    "parse_graph6",
    "verify_certificate",
    "verify_theorem",
    "write_graph6",
]
