"""
Generators for the extremal graph families of the Steiner 4-diameter.

Labelling is deterministic: core or spine vertices come first (0, 1, ...),
then the attachments in parameter order a, b, c, d, each pendant path
numbered outward from the vertex it hangs from.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, Iterator, List, Tuple

from .characterization import H3Attachment
from .exceptions import FamilyParameterError
from .formats import encode_graph6
from .graph import Edge, Graph, build_graph, is_connected

logger = logging.getLogger(__name__)


class Family(str, Enum):
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    H4 = "H4"
    T = "T"
    DELTA = "DELTA"
    DELTA_PRIME = "DELTA_PRIME"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"


# parameters each family reads; the others must stay 0
_USED: Dict[Family, str] = {
    Family.H1: "abcd",
    Family.H2: "abc",
    Family.H3: "ab",
    Family.H4: "ab",
    Family.T: "abcd",
    Family.DELTA: "abcd",
    Family.DELTA_PRIME: "abcd",
    Family.G1: "abcd",
    Family.G2: "abcd",
    Family.G3: "abcd",
}


@dataclass(frozen=True)
class FamilyParams:
    """Parameter tuple of one family member of order ``n``."""

    family: Family
    n: int
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def validate(self) -> "FamilyParams":
        """
        Check the family's constraints.

        Returns:
            self, so calls can be chained

        Raises:
            FamilyParameterError: Naming the first violated inequality
        """
        family, n = self.family, self.n
        a, b, c, d = self.as_tuple()

        def require(condition: bool, inequality: str) -> None:
            if not condition:
                raise FamilyParameterError(family.value, inequality)

        for name in "abcd":
            value = getattr(self, name)
            require(value >= 0, f"{name} >= 0")
            if name not in _USED[family]:
                require(value == 0, f"{name} = 0 (unused by {family.value})")

        if family is Family.H1:
            require(a <= b <= c <= d, "a <= b <= c <= d")
            require(d >= 1, "d >= 1")
            require(self.total == n - 4, "a + b + c + d = n - 4")
        elif family is Family.H2:
            require(a <= b, "a <= b")
            require(a + b + c == n - 4, "a + b + c = n - 4")
        elif family in (Family.H3, Family.H4):
            require(a <= b, "a <= b")
            require(b >= 1, "b >= 1")
            require(a + b == n - 4, "a + b = n - 4")
        elif family is Family.T:
            require(self.total <= n - 1, "a + b + c + d <= n - 1")
        elif family is Family.DELTA:
            require(self.total <= n - 2, "a + b + c + d <= n - 2")
            require(a + b + c <= n - 3, "a + b + c <= n - 3")
        elif family is Family.DELTA_PRIME:
            require(self.total <= n - 3, "a + b + c + d <= n - 3")
            require(self.total <= n - 5, "a + b + c + d <= n - 5")
        else:
            require(self.total == n - 4, "a + b + c + d = n - 4")
        return self


class _Builder:
    """Accumulates edges while handing out fresh vertex labels."""

    def __init__(self, first_free: int):
        self.next_label = first_free
        self.edges: List[Edge] = []

    def fresh(self) -> int:
        label = self.next_label
        self.next_label += 1
        return label

    def path(self, anchor: int, length: int) -> List[int]:
        """Hang a path of ``length`` new vertices from ``anchor``."""
        added = []
        previous = anchor
        for _ in range(length):
            v = self.fresh()
            self.edges.append((previous, v))
            added.append(v)
            previous = v
        return added

    def joined(self, anchors: Tuple[int, ...], count: int) -> None:
        """Add ``count`` new vertices, each adjacent to every anchor."""
        for _ in range(count):
            v = self.fresh()
            self.edges.extend((anchor, v) for anchor in anchors)


def _expect(params: FamilyParams, family: Family) -> None:
    if params.family is not family:
        raise FamilyParameterError(family.value, f"params for {params.family.value} given")
    params.validate()


def _spine(length: int) -> List[Edge]:
    return [(i, i + 1) for i in range(length - 1)]


_K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_C4 = [(0, 1), (1, 2), (2, 3), (3, 0)]
_K4_MINUS = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def gen_h(
    i: int,
    params: FamilyParams,
    attachment: H3Attachment = H3Attachment.ADJACENT,
) -> Graph:
    """
    Build H_i on cores ``u1..u4`` = vertices ``0..3``.

    - H1: K4 with a, b, c, d leaves at u1, u2, u3, u4.
    - H2: K4 minus u1u4, a leaves at u2, b leaves at u3, c vertices joined to u1 and u4.
    - H3: 4-cycle u1u2u3u4u1; a vertices joined to (u1, u2) and b to (u3, u4),
      or to (u1, u3) and (u2, u4) with ``H3Attachment.OPPOSITE``.
    - H4: u3 joined to u1, u2, u4, a leaves at u3, b vertices joined to u1, u2, u4.
    """
    if i not in (1, 2, 3, 4):
        raise FamilyParameterError(f"H{i}", "1 <= i <= 4")
    _expect(params, Family(f"H{i}"))
    builder = _Builder(4)

    if i == 1:
        core = list(_K4)
        for anchor, count in enumerate(params.as_tuple()):
            builder.joined((anchor,), count)
    elif i == 2:
        core = list(_K4_MINUS)
        builder.joined((1,), params.a)
        builder.joined((2,), params.b)
        builder.joined((0, 3), params.c)
    elif i == 3:
        core = list(_C4)
        if H3Attachment(attachment) is H3Attachment.OPPOSITE:
            builder.joined((0, 2), params.a)
            builder.joined((1, 3), params.b)
        else:
            builder.joined((0, 1), params.a)
            builder.joined((2, 3), params.b)
    else:
        core = [(2, 0), (2, 1), (2, 3)]
        builder.joined((2,), params.a)
        builder.joined((0, 1, 3), params.b)

    return build_graph(params.n, core + builder.edges)


def gen_t(params: FamilyParams) -> Graph:
    """
    Build T: a spine of ``n - b - c`` vertices with a ``b``-vertex branch at
    spine vertex ``a + 1`` and a ``c``-vertex branch at spine vertex
    ``n - b - c - d`` (both 1-indexed). The result is a tree with at most 4 leaves.
    """
    _expect(params, Family.T)
    m = params.n - params.b - params.c
    builder = _Builder(m)
    builder.path(params.a, params.b)
    builder.path(m - params.d - 1, params.c)
    return build_graph(params.n, _spine(m) + builder.edges)


def gen_delta(params: FamilyParams) -> Graph:
    """
    Build Δ: a spine of ``n - b - c - 1`` vertices; ``b + 1`` new vertices hang
    from spine vertex ``a + 1`` and the first of them also joins spine vertex
    ``a + 2``, closing a triangle; a ``c``-vertex branch hangs from spine vertex
    ``m - d``.
    """
    _expect(params, Family.DELTA)
    m = params.n - params.b - params.c - 1
    builder = _Builder(m)
    first = builder.path(params.a, params.b + 1)[0]
    builder.edges.append((params.a + 1, first))
    builder.path(m - params.d - 1, params.c)
    return build_graph(params.n, _spine(m) + builder.edges)


def gen_delta_prime(params: FamilyParams) -> Graph:
    """
    Build Δ′: Δ's first triangle on a spine of ``n - b - c - 2`` vertices, plus
    ``c + 1`` new vertices hanging from spine vertex ``m - d`` whose first one
    also joins spine vertex ``m - d - 1``. The two triangles share at most one vertex.
    """
    _expect(params, Family.DELTA_PRIME)
    m = params.n - params.b - params.c - 2
    builder = _Builder(m)
    first = builder.path(params.a, params.b + 1)[0]
    builder.edges.append((params.a + 1, first))
    anchor = m - params.d - 1
    second = builder.path(anchor, params.c + 1)[0]
    builder.edges.append((anchor - 1, second))
    return build_graph(params.n, _spine(m) + builder.edges)


def gen_g(i: int, params: FamilyParams) -> Graph:
    """Build G_i: a K4 (G1), C4 (G2) or K4 minus one edge (G3) with pendant paths a, b, c, d."""
    cores = {1: _K4, 2: _C4, 3: _K4_MINUS}
    if i not in cores:
        raise FamilyParameterError(f"G{i}", "1 <= i <= 3")
    _expect(params, Family(f"G{i}"))
    builder = _Builder(4)
    for anchor, length in enumerate(params.as_tuple()):
        builder.path(anchor, length)
    return build_graph(params.n, list(cores[i]) + builder.edges)


def generate(
    params: FamilyParams,
    attachment: H3Attachment = H3Attachment.ADJACENT,
) -> Graph:
    """Build the family member described by ``params``."""
    family = params.family
    if family is Family.T:
        return gen_t(params)
    if family is Family.DELTA:
        return gen_delta(params)
    if family is Family.DELTA_PRIME:
        return gen_delta_prime(params)
    index = int(family.value[1])
    if family.value.startswith("H"):
        return gen_h(index, params, attachment)
    return gen_g(index, params)


def iter_family_params(family: Family, n: int) -> Iterator[FamilyParams]:
    """Every valid parameter tuple of ``family`` at order ``n``, in lexicographic order."""
    family = Family(family)
    ranges = [range(n + 1) if name in _USED[family] else range(1) for name in "abcd"]
    for a, b, c, d in product(*ranges):
        params = FamilyParams(family, n, a, b, c, d)
        try:
            params.validate()
        except FamilyParameterError:
            continue
        yield params


def generate_sweep(
    family: Family,
    n: int,
    attachment: H3Attachment = H3Attachment.ADJACENT,
) -> Iterator[Tuple[FamilyParams, Graph]]:
    """Every member of ``family`` at order ``n``, deduplicated by graph6 string."""
    seen = set()
    for params in iter_family_params(family, n):
        graph = generate(params, attachment)
        key = encode_graph6(graph)
        if key in seen:
            continue
        seen.add(key)
        yield params, graph
    logger.debug(f"{Family(family).value} sweep at n = {n}: {len(seen)} distinct graphs")


def is_tree_with_at_most_4_leaves(g: Graph) -> bool:
    """Whether ``g`` is a tree with at most four degree-1 vertices."""
    if g.n == 0 or g.edge_count != g.n - 1 or not is_connected(g):
        return False
    return sum(1 for v in range(g.n) if g.degree(v) == 1) <= 4
