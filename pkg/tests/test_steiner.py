"""Test Steiner distance: subset DP, oracle and all-subsets table."""

import random
from itertools import combinations

import networkx as nx
import pytest

from steiner_toolkit.config import Config
from steiner_toolkit.exceptions import OracleLimitError, SubsetSizeError, VertexRangeError
from steiner_toolkit.graph import Graph, random_connected_graph
from steiner_toolkit.steiner import (
    SteinerDistanceResult,
    steiner_distance,
    steiner_distance_oracle,
    steiner_distance_table,
)
from steiner_toolkit.utils.bits import mask_of

from .graphs import complete, cycle, disjoint_union, path, star


def assert_valid_witness(g: Graph, terminals, result: SteinerDistanceResult) -> None:
    """A witness must be a tree of g with ``value`` edges covering every terminal."""
    assert result.is_reachable
    assert len(result.witness_tree) == result.value
    assert all(g.has_edge(u, v) for u, v in result.witness_tree)
    tree = nx.Graph()
    tree.add_nodes_from(result.witness_vertices)
    tree.add_edges_from(result.witness_tree)
    assert set(terminals) <= set(tree.nodes)
    assert nx.is_tree(tree)


def test_steiner_distance_examples():
    """Test K4, P5, C6 and a star."""
    assert steiner_distance(complete(4), {0, 1, 2, 3}).value == 3
    assert steiner_distance(path(5), {0, 2, 4}).value == 4
    assert steiner_distance(cycle(6), {0, 1, 3}).value == 3
    assert steiner_distance(star(5), {1, 2, 3, 4}).value == 4


def test_single_terminal():
    """Test that one terminal costs nothing and is its own witness."""
    result = steiner_distance(path(3), [2])

    assert result.value == 0
    assert result.witness_tree == ()
    assert result.witness_vertices == frozenset({2})


def test_unreachable_terminals():
    """Test the unreachable marker for terminals in different components."""
    two_k2 = disjoint_union(path(2), path(2))

    for engine in (steiner_distance, steiner_distance_oracle):
        result = engine(two_k2, {0, 2})
        assert result.value is None
        assert not result.is_reachable
        assert result.witness_tree == ()


def test_terminal_validation():
    """Test empty and out-of-range terminal sets."""
    with pytest.raises(SubsetSizeError):
        steiner_distance(path(3), [])
    with pytest.raises(VertexRangeError, match="terminal 5"):
        steiner_distance(path(3), [0, 5])
    with pytest.raises(VertexRangeError):
        steiner_distance_oracle(path(3), [-1])


def test_terminal_cap():
    """Test the DP terminal cap from the argument and from the config."""
    spread = [0, 2, 4, 6]
    with pytest.raises(SubsetSizeError, match="cap of 3"):
        steiner_distance(path(7), spread, max_terminals=3)
    with pytest.raises(SubsetSizeError):
        steiner_distance(path(7), spread, config=Config(max_terminals=2))
    # fast paths are not capped
    assert steiner_distance(path(7), range(7), max_terminals=2).value == 6


def test_oracle_limit():
    """Test that the oracle refuses graphs above its cap."""
    with pytest.raises(OracleLimitError, match="n <= 16"):
        steiner_distance_oracle(path(17), {0, 16})
    with pytest.raises(OracleLimitError):
        steiner_distance_oracle(path(6), {0, 5}, max_oracle_n=5)
    with pytest.raises(OracleLimitError):
        steiner_distance_table(path(6), max_oracle_n=5)


def test_oracle_examples():
    """Test the oracle on a star and on C5."""
    assert steiner_distance_oracle(star(5), {1, 2, 3, 4}).value == 4
    for terminals in combinations(range(5), 4):
        assert steiner_distance_oracle(cycle(5), terminals).value == 3


def test_witness_trees_are_valid():
    """Test witness validity for DP and oracle on random graphs."""
    rng = random.Random(7)
    for seed in range(60):
        g = random_connected_graph(rng.randint(4, 10), 0.3, seed=seed)
        terminals = rng.sample(range(g.n), rng.randint(1, min(5, g.n)))
        for engine in (steiner_distance, steiner_distance_oracle):
            assert_valid_witness(g, terminals, engine(g, terminals))


def _assert_engines_agree(g: Graph) -> None:
    table = steiner_distance_table(g)
    for k in range(2, min(5, g.n) + 1):
        for terminals in combinations(range(g.n), k):
            value = steiner_distance(g, terminals).value
            assert value == steiner_distance_oracle(g, terminals).value, terminals
            assert value == table[mask_of(terminals)], terminals


def test_dp_matches_oracle_exhaustive(connected_corpus):
    """Test the DP against the oracle and the table on every connected graph n <= 6, |S| = 2..5."""
    for n in range(2, 7):
        for g in connected_corpus[n]:
            _assert_engines_agree(g)


@pytest.mark.slow
def test_dp_matches_oracle_order_7(connected_corpus):
    """Test the DP against the oracle and the table on every connected graph of order 7."""
    assert len(connected_corpus[7]) == 853
    for g in connected_corpus[7]:
        _assert_engines_agree(g)


def test_dp_matches_oracle_random():
    """Test the DP against the oracle on 500 seeded random connected graphs n <= 10."""
    rng = random.Random(2024)
    for seed in range(500):
        n = rng.randint(2, 10)
        g = random_connected_graph(n, rng.uniform(0.15, 0.6), seed=seed)
        terminals = rng.sample(range(n), rng.randint(2, min(5, n)))
        assert steiner_distance(g, terminals).value == steiner_distance_oracle(g, terminals).value


def test_two_terminals_match_bfs():
    """Test that |S| = 2 gives the shortest-path distance."""
    for seed in range(30):
        g = random_connected_graph(9, 0.3, seed=seed)
        lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
        for u, v in combinations(range(9), 2):
            assert steiner_distance(g, {u, v}).value == lengths[u][v]


def test_lower_bound_and_complete_graphs():
    """Test d(S) >= |S| - 1 with equality on complete graphs."""
    for k in range(1, 7):
        assert steiner_distance(complete(6), range(k)).value == k - 1
    for seed in range(30):
        g = random_connected_graph(8, 0.3, seed=seed)
        for k in range(1, 6):
            assert steiner_distance(g, range(k)).value >= k - 1


def test_monotone_in_terminal_set():
    """Test S subset of S' implies d(S) <= d(S')."""
    rng = random.Random(5)
    for seed in range(40):
        g = random_connected_graph(9, 0.3, seed=seed)
        larger = rng.sample(range(9), 5)
        smaller = larger[:3]
        assert steiner_distance(g, smaller).value <= steiner_distance(g, larger).value


def test_table_marks_disconnected_subsets():
    """Test that the table uses None for subsets spread over components."""
    table = steiner_distance_table(disjoint_union(path(3), path(2)))

    assert table[mask_of([0, 2])] == 2
    assert table[mask_of([0, 3])] is None
    assert table[mask_of([3, 4])] == 1
