"""Immutable simple graphs with bitset adjacency and the structural queries built on them."""

import logging
import random
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .config import Config, get_default_config
from .exceptions import DisconnectedGraphError, GraphError
from .utils.bits import closure, is_connected_mask, iter_bits, mask_of

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


class Graph:
    """
    Simple undirected graph on the vertices ``0..n-1``.

    Adjacency is stored as one integer bitset per vertex: bit ``v`` of
    ``rows[u]`` is set iff ``u`` and ``v`` are adjacent. Instances are
    immutable and hashable, so they can be shared freely between workers.

    Example:
        >>> g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        >>> g.degree(1), g.edge_count
        (2, 3)
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {u} names a vertex outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise GraphError(f"adjacency is not symmetric at ({u}, {v})")
        self._n = n
        self._rows = tuple(rows)

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Build from rows already known to be symmetric and loop-free."""
        graph = cls.__new__(cls)
        graph._n = n
        graph._rows = tuple(rows)
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, labelling its nodes in iteration (first-seen) order."""
        labels = {node: index for index, node in enumerate(nx_graph.nodes())}
        return build_graph(len(labels), ((labels[u], labels[v]) for u, v in nx_graph.edges()))

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self._n

    @property
    def rows(self) -> Tuple[int, ...]:
        """Bitset adjacency rows."""
        return self._rows

    @property
    def vertex_mask(self) -> int:
        """Mask holding every vertex."""
        return (1 << self._n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    @property
    def min_degree(self) -> int:
        """δ(G); 0 for the empty vertex set."""
        return min((row.bit_count() for row in self._rows), default=0)

    @property
    def max_degree(self) -> int:
        """Δ(G); 0 for the empty vertex set."""
        return max((row.bit_count() for row in self._rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self._rows[v]))

    def edges(self) -> List[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        result = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in increasing vertex order."""
        kept = sorted(set(vertices))
        position = {v: i for i, v in enumerate(kept)}
        keep_mask = mask_of(kept)
        rows = []
        for v in kept:
            rows.append(mask_of(position[w] for w in iter_bits(self._rows[v] & keep_mask)))
        return Graph._trusted(len(kept), rows)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a graph from an edge list.

    Duplicate edges collapse silently; loops and out-of-range endpoints are rejected.

    Args:
        n: Vertex count; vertices are labelled ``0..n-1``
        edges: Vertex pairs

    Returns:
        The graph with exactly the given edge set

    Raises:
        GraphError: If an endpoint is out of range or an edge is a loop
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise GraphError(f"edge ({u}, {v}): endpoint {endpoint} outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def complement(g: Graph) -> Graph:
    """Complement graph: an edge is present iff it is absent in ``g``."""
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def is_connected(g: Graph) -> bool:
    """Whether ``g`` has one component; the graphs on 0 and 1 vertices count as connected."""
    return is_connected_mask(g.rows, g.vertex_mask)


def require_connected(g: Graph, operation: str) -> None:
    """Raise ``DisconnectedGraphError`` unless ``g`` is connected."""
    if not is_connected(g):
        raise DisconnectedGraphError(f"{operation} needs a connected graph")


def component_mask(g: Graph, v: int) -> int:
    """Mask of the component containing ``v``."""
    return closure(g.rows, g.vertex_mask, 1 << v)


def non_cut_vertices(g: Graph) -> VertexSet:
    """
    Vertices whose removal leaves ``g`` connected.

    Args:
        g: A connected graph

    Returns:
        Every vertex that is not an articulation point

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
    """
    require_connected(g, "non_cut_vertices")
    cut = set(nx.articulation_points(g.to_networkx()))
    return frozenset(v for v in range(g.n) if v not in cut)


def contains_c4_subgraph(g: Graph) -> bool:
    """Whether some four vertices carry a 4-cycle (not necessarily induced)."""
    rows = g.rows
    for u in range(g.n):
        for v in range(u + 1, g.n):
            # two common neighbours close a 4-cycle through u and v
            if (rows[u] & rows[v]).bit_count() >= 2:
                return True
    return False


def _two_core(g: Graph) -> int:
    alive = g.vertex_mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (g.rows[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def circumference(g: Graph) -> Optional[int]:
    """
    Length of a longest cycle, or ``None`` when ``g`` is acyclic.

    Exact backtracking over simple paths starting at the smallest vertex of
    the cycle, restricted to the 2-core. Meant for graphs of a dozen or so vertices.
    """
    core = _two_core(g)
    if not core:
        return None
    rows = g.rows
    total = core.bit_count()
    best = 0

    for start in iter_bits(core):
        # only vertices larger than the start may follow it
        region = core & ~((1 << start) - 1)
        region = closure(rows, region, 1 << start)
        if region.bit_count() <= best:
            continue
        start_bit = 1 << start

        def extend(v: int, visited: int, length: int) -> None:
            nonlocal best
            if length >= 3 and rows[v] & start_bit and length > best:
                best = length
            if best == total:
                return
            open_vertices = region & ~visited
            if length + open_vertices.bit_count() <= best:
                return
            for w in iter_bits(rows[v] & open_vertices):
                extend(w, visited | (1 << w), length + 1)
                if best == total:
                    return

        extend(start, start_bit, 1)
        if best == total:
            break

    return best or None


def random_connected_graph(
    n: int,
    edge_probability: float,
    seed: int,
    config: Optional[Config] = None,
) -> Graph:
    """
    Sample a connected graph deterministically from ``seed``.

    Draws G(n, p) up to ``config.random_retries`` times and returns the first
    connected sample. If none is connected, a random spanning tree is laid
    down first and one more G(n, p) sample is added on top of it.

    Args:
        n: Vertex count, at least 1
        edge_probability: Edge probability strictly between 0 and 1
        seed: Random seed
        config: Configuration (defaults to the global one)

    Returns:
        A connected graph on ``n`` vertices
    """
    if n < 1:
        raise GraphError(f"random_connected_graph needs n >= 1, got {n}")
    if not 0.0 < edge_probability < 1.0:
        raise GraphError(f"edge probability must lie in (0, 1), got {edge_probability}")
    config = config or get_default_config()
    rng = random.Random(seed)

    for _ in range(config.random_retries):
        sample = nx.gnp_random_graph(n, edge_probability, seed=rng)
        if nx.is_connected(sample):
            return Graph.from_networkx(sample)

    logger.debug(
        f"No connected G({n}, {edge_probability}) in {config.random_retries} draws; "
        "falling back to a random spanning tree"
    )
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    edges.extend(nx.gnp_random_graph(n, edge_probability, seed=rng).edges())
    return build_graph(n, edges)
