"""
Decidable characterizations of the Steiner 4-diameter.

The H1..H4 tests decide whether a "core plus attachment rule" graph is a
spanning subgraph of a given graph. Each outside vertex of an H graph only
constrains which core vertices it must see, so a scan over candidate cores
with one coverage mask per core is exact.
"""

import logging
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Callable, Iterator, Optional, Tuple

from .config import Config
from .exceptions import GraphOrderError, SubsetSizeError
from .graph import Graph, complement, contains_c4_subgraph, non_cut_vertices, require_connected
from .metrics import steiner_diameter
from .utils.bits import iter_bits, k_subset_masks, lowest_bit, neighbourhood

logger = logging.getLogger(__name__)


class H3Attachment(str, Enum):
    """
    Which vertex pairs of the 4-cycle ``u1 u2 u3 u4`` the extra H3 vertices join.

    ``ADJACENT`` joins them to ``(u1, u2)`` or ``(u3, u4)``; ``OPPOSITE`` joins
    them to ``(u1, u3)`` or ``(u2, u4)``. Only ``OPPOSITE`` makes the
    sdiam4 = 4 characterization hold; ``ADJACENT`` already fails at order 6.
    """

    OPPOSITE = "opposite"
    ADJACENT = "adjacent"


def _require_order(g: Graph, minimum: int, operation: str) -> None:
    if g.n < minimum:
        raise GraphOrderError(f"{operation} needs n >= {minimum}, got n = {g.n}")


def _covers(outside: int, coverage: int) -> bool:
    return outside & ~coverage == 0


def spanning_h1(gbar: Graph) -> bool:
    """A K4 in ``gbar`` that every other vertex sees at least once."""
    _require_order(gbar, 5, "spanning_h1")
    rows = gbar.rows
    for core in k_subset_masks(range(gbar.n), 4):
        if all(core & ~rows[u] == 1 << u for u in iter_bits(core)):
            if _covers(gbar.vertex_mask & ~core, neighbourhood(rows, core)):
                return True
    return False


def spanning_h2(gbar: Graph) -> bool:
    """
    A K4 minus ``u1u4`` in ``gbar`` such that every other vertex sees ``u2``
    or ``u3``, or sees both ``u1`` and ``u4``.
    """
    _require_order(gbar, 5, "spanning_h2")
    rows = gbar.rows
    for u2 in range(gbar.n):
        for u3 in iter_bits(rows[u2] >> (u2 + 1) << (u2 + 1)):
            common = rows[u2] & rows[u3]
            for u1 in iter_bits(common):
                for u4 in iter_bits(common & ~((1 << (u1 + 1)) - 1)):
                    core = 1 << u1 | 1 << u2 | 1 << u3 | 1 << u4
                    coverage = rows[u2] | rows[u3] | (rows[u1] & rows[u4])
                    if _covers(gbar.vertex_mask & ~core, coverage):
                        return True
    return False


def _four_cycles(rows: Tuple[int, ...], n: int) -> Iterator[Tuple[int, int, int, int]]:
    """Every 4-cycle ``u1 u2 u3 u4 u1`` once per rotation and direction."""
    for u1 in range(n):
        for u2 in iter_bits(rows[u1]):
            for u3 in iter_bits(rows[u2] & ~(1 << u1)):
                for u4 in iter_bits(rows[u3] & rows[u1] & ~(1 << u2)):
                    yield u1, u2, u3, u4


def spanning_h3(gbar: Graph, attachment: H3Attachment = H3Attachment.OPPOSITE) -> bool:
    """
    A 4-cycle ``u1 u2 u3 u4`` in ``gbar`` such that every other vertex sees
    both ends of one of the two attachment pairs.
    """
    _require_order(gbar, 5, "spanning_h3")
    attachment = H3Attachment(attachment)
    rows = gbar.rows
    for u1, u2, u3, u4 in _four_cycles(rows, gbar.n):
        if attachment is H3Attachment.ADJACENT:
            coverage = (rows[u1] & rows[u2]) | (rows[u3] & rows[u4])
        else:
            coverage = (rows[u1] & rows[u3]) | (rows[u2] & rows[u4])
        core = 1 << u1 | 1 << u2 | 1 << u3 | 1 << u4
        if _covers(gbar.vertex_mask & ~core, coverage):
            return True
    return False


def spanning_h4(gbar: Graph) -> bool:
    """
    A claw with centre ``u3`` and leaves ``u1, u2, u4`` in ``gbar`` such that
    every other vertex sees ``u3`` or all three leaves, and at least one
    other vertex sees all three leaves.
    """
    _require_order(gbar, 5, "spanning_h4")
    rows = gbar.rows
    for centre in range(gbar.n):
        if rows[centre].bit_count() < 3:
            continue
        for leaves in k_subset_masks(list(iter_bits(rows[centre])), 3):
            outside = gbar.vertex_mask & ~leaves & ~(1 << centre)
            full_attachment = rows[lowest_bit(leaves)]
            for leaf in iter_bits(leaves):
                full_attachment &= rows[leaf]
            if outside & full_attachment and _covers(outside, rows[centre] | full_attachment):
                return True
    return False


def predicate_sdiam4_is_3(g: Graph) -> bool:
    """
    Whether sdiam4(g) = 3, decided without computing it.

    True for n = 4; for n >= 5 iff the minimum degree is at least ``n - 3``
    and the complement has no 4-cycle.

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
        GraphOrderError: If ``n < 4``
    """
    require_connected(g, "predicate_sdiam4_is_3")
    _require_order(g, 4, "predicate_sdiam4_is_3")
    if g.n == 4:
        return True
    return g.min_degree >= g.n - 3 and not contains_c4_subgraph(complement(g))


@dataclass(frozen=True)
class SdiamFourVerdict:
    """
    Outcome of the sdiam4 = 4 predicate; truthy iff the predicate holds.

    ``condition`` is ``"i"`` (minimum degree n-3 with a 4-cycle in the
    complement), ``"ii"`` (minimum degree at most n-4 with no H pattern in the
    complement) or ``None``. ``matched`` lists the H indices found in the
    complement, evaluated whatever the degree.
    """

    holds: bool
    condition: Optional[str]
    matched: Tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds


def matched_h_patterns(
    gbar: Graph,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
) -> Tuple[int, ...]:
    """Indices ``i`` with H_i a spanning subgraph of ``gbar``."""
    tests: Tuple[Tuple[int, Callable[[Graph], bool]], ...] = (
        (1, spanning_h1),
        (2, spanning_h2),
        (3, lambda graph: spanning_h3(graph, attachment)),
        (4, spanning_h4),
    )
    return tuple(index for index, test in tests if test(gbar))


def predicate_sdiam4_is_4(
    g: Graph,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
) -> SdiamFourVerdict:
    """
    Whether sdiam4(g) = 4, decided without computing it.

    Holds iff the minimum degree is ``n - 3`` and the complement contains a
    4-cycle, or the minimum degree is at most ``n - 4`` and none of H1..H4 is
    a spanning subgraph of the complement.

    Args:
        g: A connected graph with ``n >= 5``
        attachment: Reading of the H3 attachment rule

    Returns:
        SdiamFourVerdict with the matched condition and H patterns
    """
    require_connected(g, "predicate_sdiam4_is_4")
    _require_order(g, 5, "predicate_sdiam4_is_4")
    gbar = complement(g)
    delta = g.min_degree
    matched = matched_h_patterns(gbar, attachment)

    if delta == g.n - 3 and contains_c4_subgraph(gbar):
        return SdiamFourVerdict(True, "i", matched)
    if delta <= g.n - 4 and not matched:
        return SdiamFourVerdict(True, "ii", matched)
    return SdiamFourVerdict(False, None, matched)


def predicate_sdiam_k_is_nminus1(g: Graph, k: int) -> bool:
    """
    Whether sdiam_k(g) = n - 1: iff ``g`` has at most ``k`` non-cut vertices.

    Raises:
        SubsetSizeError: Unless ``3 <= k <= n - 1``
    """
    require_connected(g, "predicate_sdiam_k_is_nminus1")
    if not 3 <= k <= g.n - 1:
        raise SubsetSizeError(f"k must lie in 3..{g.n - 1}, got {k}")
    return len(non_cut_vertices(g)) <= k


def corollary1_holds(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> bool:
    """At least ``k + 1`` non-cut vertices iff sdiam_k(g) <= n - 2, for ``3 <= k <= n - 2``."""
    require_connected(g, "corollary1_holds")
    if not 3 <= k <= g.n - 2:
        raise SubsetSizeError(f"k must lie in 3..{g.n - 2}, got {k}")
    many_non_cut = len(non_cut_vertices(g)) >= k + 1
    return many_non_cut == (steiner_diameter(g, k, method, config) <= g.n - 2)


def lemma2_holds(
    g: Graph,
    k: int,
    method: str = "auto",
    config: Optional[Config] = None,
) -> bool:
    """sdiam_k(g) = k - 1 forces the complement's maximum degree to be at most ``k - 2``."""
    require_connected(g, "lemma2_holds")
    if not 3 <= k <= g.n:
        raise SubsetSizeError(f"k must lie in 3..{g.n}, got {k}")
    if steiner_diameter(g, k, method, config) != k - 1:
        return True
    return complement(g).max_degree <= k - 2


@dataclass(frozen=True)
class ClassificationRecord:
    """Every sdiam4 verdict for one graph next to the computed value."""

    n: int
    min_degree: int
    sdiam4: int
    thm2_verdict: bool
    thm3_verdict: bool
    thm3_condition: Optional[str]
    thm3_matched: Tuple[int, ...]
    h3_attachment: str
    lemma1_verdict: bool
    non_cut_count: int
    overlap: bool
    consistent: bool
    graph6: Optional[str] = None

    def to_dict(self) -> dict:
        record = asdict(self)
        record["thm3_matched"] = list(self.thm3_matched)
        if self.graph6 is None:
            del record["graph6"]
        return record


def classify(
    g: Graph,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
    method: str = "auto",
    config: Optional[Config] = None,
    graph6: Optional[str] = None,
) -> ClassificationRecord:
    """
    Evaluate every sdiam4 predicate on ``g`` and compare with the computed sdiam4.

    All predicates are evaluated, none short-circuits. ``consistent`` requires
    each verdict to match its equivalence; ``overlap`` flags graphs where the
    "= 4" and "= n - 1" verdicts are both true, which happens only at n = 5.

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
        GraphOrderError: If ``n < 5``
    """
    require_connected(g, "classify")
    _require_order(g, 5, "classify")
    attachment = H3Attachment(attachment)

    sdiam4 = steiner_diameter(g, 4, method, config)
    thm2 = predicate_sdiam4_is_3(g)
    thm3 = predicate_sdiam4_is_4(g, attachment)
    lemma1 = predicate_sdiam_k_is_nminus1(g, 4)

    consistent = (
        thm2 == (sdiam4 == 3)
        and bool(thm3) == (sdiam4 == 4)
        and lemma1 == (sdiam4 == g.n - 1)
    )
    if not consistent:
        logger.info(f"inconsistent verdicts at n = {g.n}: sdiam4 = {sdiam4}")

    return ClassificationRecord(
        n=g.n,
        min_degree=g.min_degree,
        sdiam4=sdiam4,
        thm2_verdict=thm2,
        thm3_verdict=thm3.holds,
        thm3_condition=thm3.condition,
        thm3_matched=thm3.matched,
        h3_attachment=attachment.value,
        lemma1_verdict=lemma1,
        non_cut_count=len(non_cut_vertices(g)),
        overlap=thm3.holds and lemma1,
        consistent=consistent,
        graph6=graph6,
    )
