"""Generic spanning-subgraph embedding via networkx subgraph monomorphisms."""

from typing import TYPE_CHECKING

from networkx.algorithms.isomorphism import GraphMatcher

if TYPE_CHECKING:
    from ..graph import Graph


def spanning_embeds(host: "Graph", pattern: "Graph") -> bool:
    """
    Whether ``pattern`` is isomorphic to a spanning subgraph of ``host``.

    Both graphs must have the same order; extra host edges are allowed
    (a monomorphism, not an induced embedding).

    Args:
        host: Graph searched for the pattern
        pattern: Graph to embed

    Returns:
        True iff some vertex bijection maps every pattern edge onto a host edge
    """
    if host.n != pattern.n or pattern.edge_count > host.edge_count:
        return False
    matcher = GraphMatcher(host.to_networkx(), pattern.to_networkx())
    return matcher.subgraph_is_monomorphic()
