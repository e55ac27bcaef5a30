"""Bitmask helpers for vertex sets encoded as Python integers.

Bit ``i`` of a mask stands for vertex ``i``. Adjacency rows use the same
encoding, so neighbourhood queries become ``&``/``|`` on plain ints.
"""

from itertools import combinations
from typing import Iterable, Iterator, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    """Build a mask from vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex labels of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Return the smallest vertex label in a non-empty mask."""
    return (mask & -mask).bit_length() - 1


def neighbourhood(rows: Sequence[int], mask: int) -> int:
    """Union of the adjacency rows of every vertex in ``mask``."""
    result = 0
    while mask:
        low = mask & -mask
        result |= rows[low.bit_length() - 1]
        mask ^= low
    return result


def closure(rows: Sequence[int], within: int, start: int) -> int:
    """Vertices of ``within`` reachable from ``start`` using only vertices of ``within``."""
    seen = start & within
    frontier = seen
    while frontier:
        frontier = neighbourhood(rows, frontier) & within & ~seen
        seen |= frontier
    return seen


def is_connected_mask(rows: Sequence[int], mask: int) -> bool:
    """Whether the subgraph induced by ``mask`` is connected (the empty mask counts)."""
    if mask == 0:
        return True
    return closure(rows, mask, mask & -mask) == mask


def k_subset_masks(universe: Sequence[int], k: int) -> Iterator[int]:
    """Yield the masks of all ``k``-element subsets of ``universe`` in lexicographic order."""
    for combo in combinations(universe, k):
        yield mask_of(combo)
