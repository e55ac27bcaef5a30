"""Steiner eccentricity, radius, diameter, center, Wiener index and average distance."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, List, Optional, Tuple

from .config import Config, get_default_config
from .exceptions import ConfigurationError, SubsetSizeError, VertexRangeError
from .graph import Graph, require_connected
from .steiner import steiner_distance, steiner_distance_table
from .utils.bits import iter_bits, k_subset_masks, mask_of, neighbourhood

logger = logging.getLogger(__name__)

METHODS = ("auto", "dp", "table")

DistanceEngine = Callable[[int], int]


@dataclass(frozen=True)
class SteinerProfile:
    """Steiner k-eccentricities of every vertex and the indices derived from them."""

    k: int
    eccentricities: Tuple[int, ...]
    radius: int
    diameter: int
    center: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "eccentricities": list(self.eccentricities),
            "radius": self.radius,
            "diameter": self.diameter,
            "center": list(self.center),
        }


def distance_engine(
    g: Graph,
    method: str = "auto",
    config: Optional[Config] = None,
) -> DistanceEngine:
    """
    Return a function mapping a terminal mask of connected ``g`` to its Steiner distance.

    ``"table"`` precomputes every subset with ``steiner_distance_table``; ``"dp"``
    runs the subset DP per query; ``"auto"`` picks the table up to
    ``config.table_max_n`` vertices and the DP above.
    """
    if method not in METHODS:
        raise ConfigurationError(f"method must be one of {', '.join(METHODS)}, got {method!r}")
    config = config or get_default_config()
    if method == "auto":
        method = "table" if g.n <= config.table_max_n else "dp"
        logger.debug(f"n = {g.n}: using the {method} engine")

    if method == "table":
        table = steiner_distance_table(g, config=config)

        def from_table(mask: int) -> int:
            value = table[mask]
            assert value is not None
            return value

        return from_table

    def from_dp(mask: int) -> int:
        value = steiner_distance(g, iter_bits(mask), config=config).value
        assert value is not None
        return value

    return from_dp


def _check_k(g: Graph, k: int, low: int) -> None:
    if not low <= k <= g.n:
        raise SubsetSizeError(f"k must lie in {low}..{g.n}, got {k}")


def steiner_eccentricity(
    g: Graph,
    v: int,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> int:
    """Largest Steiner distance over the ``k``-subsets containing ``v``."""
    require_connected(g, "steiner_eccentricity")
    _check_k(g, k, 2)
    if not 0 <= v < g.n:
        raise VertexRangeError(f"vertex {v} outside 0..{g.n - 1}")
    engine = distance_engine(g, method, config)
    others = [w for w in range(g.n) if w != v]
    return max(engine(mask_of(rest) | 1 << v) for rest in combinations(others, k - 1))


def steiner_profile(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> SteinerProfile:
    """
    Steiner k-eccentricity of every vertex with srad_k, sdiam_k and the k-center.

    Every ``k``-subset is evaluated once and folded into the eccentricity of
    each of its members.

    Args:
        g: A connected graph
        k: Subset size, ``2 <= k <= n``
        method: ``"auto"``, ``"dp"`` or ``"table"``
        config: Configuration (defaults to the global one)

    Returns:
        SteinerProfile with the center sorted increasingly

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
        SubsetSizeError: If ``k`` is out of range
    """
    require_connected(g, "steiner_profile")
    _check_k(g, k, 2)
    engine = distance_engine(g, method, config)

    eccentricities = [0] * g.n
    for mask in k_subset_masks(range(g.n), k):
        value = engine(mask)
        for v in iter_bits(mask):
            if value > eccentricities[v]:
                eccentricities[v] = value

    radius = min(eccentricities)
    return SteinerProfile(
        k=k,
        eccentricities=tuple(eccentricities),
        radius=radius,
        diameter=max(eccentricities),
        center=tuple(v for v, e in enumerate(eccentricities) if e == radius),
    )


def steiner_diameter(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> int:
    """sdiam_k(g): the largest Steiner distance over all ``k``-subsets."""
    require_connected(g, "steiner_diameter")
    _check_k(g, k, 2)
    engine = distance_engine(g, method, config)
    return max(engine(mask) for mask in k_subset_masks(range(g.n), k))


def steiner_wiener_index(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> int:
    """SW_k(g): sum of the Steiner distances of all ``k``-subsets (0 for ``k = 1``)."""
    require_connected(g, "steiner_wiener_index")
    _check_k(g, k, 1)
    if k == 1:
        return 0
    engine = distance_engine(g, method, config)
    return sum(engine(mask) for mask in k_subset_masks(range(g.n), k))


def average_steiner_distance(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> Fraction:
    """mu_k(g) = SW_k(g) / C(n, k) as an exact fraction."""
    require_connected(g, "average_steiner_distance")
    _check_k(g, k, 2)
    return Fraction(steiner_wiener_index(g, k, method, config), comb(g.n, k))


def distances_from(g: Graph, source: int) -> List[int]:
    """Breadth-first distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    seen = frontier = 1 << source
    level = 0
    while frontier:
        for v in iter_bits(frontier):
            dist[v] = level
        frontier = neighbourhood(g.rows, frontier) & ~seen
        seen |= frontier
        level += 1
    return dist


def classical_wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over all unordered vertex pairs."""
    require_connected(g, "classical_wiener_index")
    return sum(sum(distances_from(g, v)) for v in range(g.n)) // 2
