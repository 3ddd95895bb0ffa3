"""Andrasfai graphs, circulant Cayley graphs and their automorphism groups."""

import json as _json

from ._core import (
    DomainError,
    Graph,
    GroupTooLargeError,
    ParseError,
    andrasfai,
    automorphism_group,
    brute_force_automorphisms,
    cayley_graph,
    diameter,
    find_isomorphism,
    from_graph6,
    girth,
    is_connected,
    is_vertex_transitive,
    to_dot,
    to_edge_list,
    to_graph6,
)


def verify_theorem(k, oracle=False):
    """Certificate report for And(k) as a dict (same schema as `andrasfai verify`)."""
    from ._core import verify_theorem_json

    return _json.loads(verify_theorem_json(k, oracle))


__all__ = [
    "DomainError",
    "Graph",
    "GroupTooLargeError",
    "ParseError",
    "andrasfai",
    "automorphism_group",
    "brute_force_automorphisms",
    "cayley_graph",
    "diameter",
    "find_isomorphism",
    "from_graph6",
    "girth",
    "is_connected",
    "is_vertex_transitive",
    "to_dot",
    "to_edge_list",
    "to_graph6",
    "verify_theorem",
]
