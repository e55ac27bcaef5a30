"""Exhaustive small-graph corpora from the networkx graph atlas."""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx

from .exceptions import GraphOrderError
from .graph import Graph, is_connected

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7


@lru_cache(maxsize=1)
def _atlas_by_order() -> Dict[int, Tuple[Graph, ...]]:
    by_order: Dict[int, List[Graph]] = {}
    for nx_graph in nx.graph_atlas_g():
        by_order.setdefault(nx_graph.number_of_nodes(), []).append(Graph.from_networkx(nx_graph))
    logger.debug(f"Loaded graph atlas: {sum(len(v) for v in by_order.values())} graphs")
    return {order: tuple(graphs) for order, graphs in by_order.items()}


def atlas_graphs(n: int, connected_only: bool = True) -> List[Graph]:
    """
    Every graph of order ``n`` up to isomorphism, in atlas order.

    Args:
        n: Order, ``1 <= n <= 7``
        connected_only: Drop disconnected graphs

    Returns:
        One representative per isomorphism class

    Raises:
        GraphOrderError: If ``n`` is outside the atlas range
    """
    if not 1 <= n <= ATLAS_MAX_N:
        raise GraphOrderError(f"the graph atlas covers 1 <= n <= {ATLAS_MAX_N}, got {n}")
    graphs = _atlas_by_order()[n]
    if connected_only:
        return [g for g in graphs if is_connected(g)]
    return list(graphs)
