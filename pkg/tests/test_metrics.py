"""Test Steiner eccentricity, radius, diameter, Wiener index and average distance."""

import random
from fractions import Fraction

import networkx as nx
import pytest

from steiner_toolkit.config import Config
from steiner_toolkit.exceptions import (
    ConfigurationError,
    DisconnectedGraphError,
    SubsetSizeError,
    VertexRangeError,
)
from steiner_toolkit.graph import Graph, build_graph, random_connected_graph
from steiner_toolkit.metrics import (
    average_steiner_distance,
    classical_wiener_index,
    distances_from,
    steiner_diameter,
    steiner_eccentricity,
    steiner_profile,
    steiner_wiener_index,
)

from .graphs import complete, cycle, disjoint_union, k6_minus_perfect_matching, path, star


def test_steiner_eccentricity_examples():
    """Test eccentricities on P5 and K6."""
    assert steiner_eccentricity(path(5), 0, 2) == 4
    assert all(steiner_eccentricity(path(5), v, 3) == 4 for v in range(5))
    assert all(steiner_eccentricity(complete(6), v, 4) == 3 for v in range(6))


def test_profile_of_p5():
    """Test the k = 2 and k = 3 profiles of P5."""
    classical = steiner_profile(path(5), 2)
    assert classical.diameter == 4
    assert classical.radius == 2
    assert classical.center == (2,)
    assert classical.eccentricities == (4, 3, 2, 3, 4)

    triples = steiner_profile(path(5), 3)
    assert triples.eccentricities == (4, 4, 4, 4, 4)
    assert triples.center == (0, 1, 2, 3, 4)


def test_profile_to_dict():
    """Test the JSON-ready form of a profile."""
    assert steiner_profile(path(3), 2).to_dict() == {
        "k": 2,
        "eccentricities": [2, 1, 2],
        "radius": 1,
        "diameter": 2,
        "center": [1],
    }


def test_sdiam4_examples():
    """Test the Steiner 4-diameter of C6, C5, K6 minus a matching and K_{1,4}."""
    assert steiner_profile(cycle(6), 4).diameter == 4
    assert steiner_diameter(cycle(5), 4) == 3
    assert steiner_diameter(k6_minus_perfect_matching(), 4) == 3
    assert steiner_diameter(star(4), 4) == 4
    assert steiner_diameter(star(4), 3) == 3


def test_wiener_index_boundaries():
    """Test SW_1 = 0 and SW_n = n - 1 on random connected graphs."""
    for seed in range(100):
        n = 2 + seed % 9
        g = random_connected_graph(n, 0.3, seed=seed)
        assert steiner_wiener_index(g, 1) == 0
        assert steiner_wiener_index(g, n) == n - 1


def test_wiener_and_average_examples():
    """Test SW_2(P3), mu_2(P3), mu_3(C4) and mu_k(K_n)."""
    assert steiner_wiener_index(path(3), 2) == 4
    assert average_steiner_distance(path(3), 2) == Fraction(4, 3)
    assert average_steiner_distance(cycle(4), 3) == 2
    for k in range(2, 7):
        assert average_steiner_distance(complete(6), k) == k - 1


def test_classical_indices_match_networkx():
    """Test SW_2, sdiam_2 and srad_2 against networkx on random connected graphs."""
    for seed in range(100):
        g = random_connected_graph(3 + seed % 8, 0.3, seed=seed)
        nx_graph = g.to_networkx()
        profile = steiner_profile(g, 2)
        assert steiner_wiener_index(g, 2) == classical_wiener_index(g)
        assert classical_wiener_index(g) == nx.wiener_index(nx_graph)
        assert profile.diameter == nx.diameter(nx_graph)
        assert profile.radius == nx.radius(nx_graph)
        assert list(profile.center) == sorted(nx.center(nx_graph))


def test_distances_from():
    """Test BFS distances, with -1 for unreachable vertices."""
    assert distances_from(path(4), 1) == [1, 0, 1, 2]
    assert distances_from(disjoint_union(path(2), path(1)), 0) == [0, 1, -1]


def _check_bounds_and_monotonicity(g: Graph) -> None:
    previous = None
    for k in range(2, min(5, g.n) + 1):
        diameter = steiner_diameter(g, k)
        assert k - 1 <= diameter <= g.n - 1
        if previous is not None:
            assert previous <= diameter
        previous = diameter


def test_diameter_bounds_and_monotonicity(connected_corpus):
    """Test k - 1 <= sdiam_k <= n - 1 and sdiam_k <= sdiam_{k+1} on every connected graph n <= 6."""
    for n in range(2, 7):
        for g in connected_corpus[n]:
            _check_bounds_and_monotonicity(g)


@pytest.mark.slow
def test_diameter_bounds_and_monotonicity_order_7(connected_corpus):
    """Test the diameter bounds and k-monotonicity on every connected graph of order 7."""
    for g in connected_corpus[7]:
        _check_bounds_and_monotonicity(g)


def test_spanning_subgraph_does_not_shrink_diameter():
    """Test sdiam_k(g) <= sdiam_k(h) after deleting non-bridge edges."""
    rng = random.Random(11)
    for seed in range(40):
        g = random_connected_graph(8, 0.45, seed=seed)
        nx_graph = g.to_networkx()
        bridges = set(nx.bridges(nx_graph))
        candidates = [e for e in g.edges() if e not in bridges and e[::-1] not in bridges]
        if not candidates:
            continue
        removed = set(rng.sample(candidates, 1))
        h = build_graph(g.n, [e for e in g.edges() if e not in removed])
        for k in (2, 3, 4):
            assert steiner_diameter(g, k) <= steiner_diameter(h, k)


def test_engines_agree():
    """Test that the dp and table engines give the same profiles."""
    for seed in range(15):
        g = random_connected_graph(8, 0.3, seed=seed)
        for k in (3, 4):
            assert steiner_profile(g, k, method="dp") == steiner_profile(g, k, method="table")


def test_auto_engine_switches_to_dp():
    """Test that graphs above table_max_n go through the DP."""
    config = Config(table_max_n=4)

    assert steiner_diameter(cycle(7), 4, config=config) == steiner_diameter(cycle(7), 4)


def test_metric_validation():
    """Test range, connectivity and engine validation."""
    with pytest.raises(SubsetSizeError, match="2..5"):
        steiner_profile(path(5), 6)
    with pytest.raises(SubsetSizeError):
        steiner_wiener_index(path(5), 0)
    with pytest.raises(SubsetSizeError):
        average_steiner_distance(path(5), 1)
    with pytest.raises(DisconnectedGraphError):
        steiner_profile(disjoint_union(path(2), path(2)), 2)
    with pytest.raises(VertexRangeError):
        steiner_eccentricity(path(5), 7, 2)
    with pytest.raises(ConfigurationError, match="method"):
        steiner_profile(path(5), 2, method="fast")
