"""
Exact Steiner distance of a terminal set.

``steiner_distance`` runs a unit-weight Dreyfus-Wagner dynamic program over
terminal subsets. ``steiner_distance_oracle`` and ``steiner_distance_table``
are independent brute-force engines over vertex supersets; the first answers
one query, the second answers every subset of a small graph at once.
"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .config import Config, get_default_config
from .exceptions import OracleLimitError, SubsetSizeError, VertexRangeError
from .graph import Edge, Graph
from .utils.bits import closure, is_connected_mask, iter_bits, lowest_bit, mask_of

logger = logging.getLogger(__name__)

_INF = float("inf")


@dataclass(frozen=True)
class SteinerDistanceResult:
    """
    Steiner distance of one terminal set.

    ``value`` is the edge count of a minimum Steiner tree, or ``None`` when the
    terminals lie in different components. ``witness_tree`` holds the sorted
    edges of one optimal tree and ``witness_vertices`` its vertex set; both are
    empty when the terminals are unreachable.
    """

    value: Optional[int]
    witness_tree: Tuple[Edge, ...] = ()
    witness_vertices: FrozenSet[int] = frozenset()

    @property
    def is_reachable(self) -> bool:
        return self.value is not None


UNREACHABLE = SteinerDistanceResult(None)


def terminal_mask(g: Graph, s: Iterable[int]) -> int:
    """
    Validate a terminal set and return it as a mask.

    Raises:
        SubsetSizeError: If ``s`` is empty
        VertexRangeError: If a terminal is outside ``0..n-1``
    """
    terminals = set(s)
    if not terminals:
        raise SubsetSizeError("terminal set must contain at least one vertex")
    for v in terminals:
        if not 0 <= v < g.n:
            raise VertexRangeError(f"terminal {v} outside 0..{g.n - 1}")
    return mask_of(terminals)


def _bfs(g: Graph, source: int) -> Tuple[List[int], List[int]]:
    """Distances (-1 when unreachable) and BFS parents from ``source``."""
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.rows[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def _spanning_tree(g: Graph, mask: int) -> List[Edge]:
    """BFS spanning tree of the connected subgraph induced by ``mask``."""
    root = lowest_bit(mask)
    seen = 1 << root
    queue = deque([root])
    edges = []
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.rows[u] & mask & ~seen):
            seen |= 1 << w
            edges.append((min(u, w), max(u, w)))
            queue.append(w)
    return edges


def _result(edges: Iterable[Edge], terminals: int) -> SteinerDistanceResult:
    tree = tuple(sorted(set(edges)))
    vertices = {v for edge in tree for v in edge} | set(iter_bits(terminals))
    return SteinerDistanceResult(len(tree), tree, frozenset(vertices))


def _path_edges(parent: List[int], target: int) -> List[Edge]:
    edges = []
    v = target
    while parent[v] >= 0:
        u = parent[v]
        edges.append((min(u, v), max(u, v)))
        v = u
    return edges


def steiner_distance(
    g: Graph,
    s: Iterable[int],
    config: Optional[Config] = None,
    max_terminals: Optional[int] = None,
) -> SteinerDistanceResult:
    """
    Minimum number of edges of a connected subgraph of ``g`` containing ``s``.

    One terminal gives 0, two terminals give the BFS distance, and a terminal
    set that already induces a connected subgraph gives ``|s| - 1``. Everything
    else goes through the subset DP

        dp[T][v] = min over u of ( min over A < T of dp[A][u] + dp[T - A][u] ) + dist(u, v)

    rooted at the first terminal.

    Args:
        g: Graph
        s: Terminal vertices
        config: Configuration (defaults to the global one)
        max_terminals: Cap on ``|s|`` for the DP; overrides ``config.max_terminals``

    Returns:
        SteinerDistanceResult with an optimal witness tree, or the unreachable marker

    Raises:
        SubsetSizeError: If ``s`` is empty or the DP would exceed the terminal cap
        VertexRangeError: If a terminal is outside ``0..n-1``

    Example:
        >>> from steiner_toolkit.graph import build_graph
        >>> c6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
        >>> steiner_distance(c6, {0, 1, 3}).value
        3
    """
    mask = terminal_mask(g, s)
    terminals = list(iter_bits(mask))
    root = terminals[0]

    if len(terminals) == 1:
        return SteinerDistanceResult(0, (), frozenset(terminals))
    if closure(g.rows, g.vertex_mask, 1 << root) & mask != mask:
        return UNREACHABLE
    if is_connected_mask(g.rows, mask):
        return _result(_spanning_tree(g, mask), mask)

    if len(terminals) == 2:
        _, parent = _bfs(g, root)
        return _result(_path_edges(parent, terminals[1]), mask)

    config = config or get_default_config()
    cap = max_terminals if max_terminals is not None else config.max_terminals
    if len(terminals) > cap:
        raise SubsetSizeError(f"{len(terminals)} terminals exceed the DP cap of {cap}")

    return _dreyfus_wagner(g, terminals)


def _dreyfus_wagner(g: Graph, terminals: List[int]) -> SteinerDistanceResult:
    root, others = terminals[0], terminals[1:]
    component = list(iter_bits(closure(g.rows, g.vertex_mask, 1 << root)))
    bfs = [_bfs(g, v) if v in component else ([], []) for v in range(g.n)]
    dist = [row for row, _ in bfs]

    size = 1 << len(others)
    dp: List[List[float]] = [[_INF] * g.n for _ in range(size)]
    grow_from: List[List[int]] = [[-1] * g.n for _ in range(size)]
    split: List[List[int]] = [[0] * g.n for _ in range(size)]

    for index, t in enumerate(others):
        bit = 1 << index
        for v in component:
            dp[bit][v] = dist[t][v]
            grow_from[bit][v] = t

    for subset in range(1, size):
        if subset & (subset - 1) == 0:
            continue
        low = subset & -subset
        merged = [_INF] * g.n
        for u in component:
            # proper submasks holding the lowest bit cover every split once
            part = (subset - 1) & subset
            while part:
                if part & low:
                    cost = dp[part][u] + dp[subset ^ part][u]
                    if cost < merged[u]:
                        merged[u] = cost
                        split[subset][u] = part
                part = (part - 1) & subset
        for v in component:
            best, source = _INF, -1
            for u in component:
                cost = merged[u] + dist[u][v]
                if cost < best:
                    best, source = cost, u
            dp[subset][v] = best
            grow_from[subset][v] = source

    full = size - 1
    edges: List[Edge] = []
    stack = [(full, root)]
    while stack:
        subset, v = stack.pop()
        u = grow_from[subset][v]
        # bfs parents from v trace the shortest path back to u
        edges.extend(_path_edges(bfs[v][1], u))
        if subset & (subset - 1):
            part = split[subset][u]
            stack.append((part, u))
            stack.append((subset ^ part, u))

    result = _result(edges, mask_of(terminals))
    logger.debug(f"DP over {len(terminals)} terminals: d(S) = {result.value}")
    return result


def steiner_distance_oracle(
    g: Graph,
    s: Iterable[int],
    config: Optional[Config] = None,
    max_oracle_n: Optional[int] = None,
) -> SteinerDistanceResult:
    """
    Brute-force Steiner distance: the smallest ``|W| - 1`` over vertex sets
    ``W`` containing ``s`` whose induced subgraph is connected.

    Raises:
        OracleLimitError: If ``g`` has more vertices than the oracle cap
    """
    config = config or get_default_config()
    cap = max_oracle_n if max_oracle_n is not None else config.max_oracle_n
    if g.n > cap:
        raise OracleLimitError(f"oracle is limited to n <= {cap}, got n = {g.n}")
    mask = terminal_mask(g, s)
    outside = [v for v in range(g.n) if not mask >> v & 1]

    for extra in range(len(outside) + 1):
        for chosen in combinations(outside, extra):
            candidate = mask | mask_of(chosen)
            if is_connected_mask(g.rows, candidate):
                return _result(_spanning_tree(g, candidate), mask)
    return UNREACHABLE


def steiner_distance_table(
    g: Graph,
    config: Optional[Config] = None,
    max_oracle_n: Optional[int] = None,
) -> List[Optional[int]]:
    """
    Steiner distance of every vertex subset, indexed by subset mask.

    Entry ``W`` starts as ``|W| - 1`` when ``g[W]`` is connected, then a
    superset-minimum sweep pulls every entry down to its cheapest connected
    superset. ``None`` marks subsets spread over several components.

    Raises:
        OracleLimitError: If ``g`` has more vertices than the oracle cap
    """
    config = config or get_default_config()
    cap = max_oracle_n if max_oracle_n is not None else config.max_oracle_n
    if g.n > cap:
        raise OracleLimitError(f"distance table is limited to n <= {cap}, got n = {g.n}")

    size = 1 << g.n
    best: List[float] = [
        subset.bit_count() - 1 if is_connected_mask(g.rows, subset) else _INF
        for subset in range(size)
    ]
    best[0] = 0
    for v in range(g.n):
        bit = 1 << v
        for subset in range(size):
            if not subset & bit and best[subset | bit] < best[subset]:
                best[subset] = best[subset | bit]
    return [None if value == _INF else int(value) for value in best]
