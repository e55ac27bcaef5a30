"""Shared fixtures: exhaustive corpora from the graph atlas."""

from typing import Dict, List

import pytest

from steiner_toolkit.corpus import atlas_graphs
from steiner_toolkit.graph import Graph


@pytest.fixture(scope="session")
def connected_corpus() -> Dict[int, List[Graph]]:
    """Every connected graph of order 1..7, keyed by order."""
    return {n: atlas_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def full_corpus() -> Dict[int, List[Graph]]:
    """Every graph of order 1..7, connected or not, keyed by order."""
    return {n: atlas_graphs(n, connected_only=False) for n in range(1, 8)}
