"""graph6 codec and the plain edge-list text format."""

import logging
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .exceptions import EdgeListError, Graph6DecodeError
from .graph import Edge, Graph, build_graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"

_BIAS = 63
_MAX_PRINTABLE = 126
_SHORT_LIMIT = 63
_MEDIUM_LIMIT = 258048
_LONG_LIMIT = 1 << 36


def _pack_groups(value: int, groups: int) -> str:
    return "".join(chr(((value >> (6 * (groups - 1 - i))) & 0x3F) + _BIAS) for i in range(groups))


def _encode_order(n: int) -> str:
    if n < _SHORT_LIMIT:
        return chr(n + _BIAS)
    if n < _MEDIUM_LIMIT:
        return "~" + _pack_groups(n, 3)
    if n < _LONG_LIMIT:
        return "~~" + _pack_groups(n, 6)
    raise ValueError(f"graph6 cannot encode {n} vertices")


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as one graph6 line (no header, no newline).

    The upper triangle is read column by column (``x(0,1), x(0,2), x(1,2), ...``),
    packed big-endian into 6-bit groups, zero padded and offset by 63.
    """
    rows = g.rows
    chars: List[str] = []
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | (rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + _BIAS))
                group = 0
                filled = 0
    if filled:
        chars.append(chr((group << (6 - filled)) + _BIAS))
    return _encode_order(g.n) + "".join(chars)


def _check_printable(line: str, offset: int, shift: int) -> int:
    value = ord(line[offset])
    if not _BIAS <= value <= _MAX_PRINTABLE:
        raise Graph6DecodeError(f"non-printable byte {value:#04x}", offset + shift, line)
    return value - _BIAS


def _decode_order(line: str, shift: int) -> Tuple[int, int]:
    if not line:
        raise Graph6DecodeError("empty graph6 line", shift, line)
    first = _check_printable(line, 0, shift)
    if first != 63:
        return first, 1

    long_form = len(line) > 1 and line[1] == "~"
    start, groups = (2, 6) if long_form else (1, 3)
    if len(line) < start + groups:
        raise Graph6DecodeError("truncated length header", len(line) + shift, line)
    n = 0
    for offset in range(start, start + groups):
        n = (n << 6) | _check_printable(line, offset, shift)
    floor = _MEDIUM_LIMIT if long_form else _SHORT_LIMIT
    if n < floor:
        raise Graph6DecodeError(f"length header is not in its shortest form (n={n})", shift, line)
    return n, start + groups


def decode_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    A leading ``>>graph6<<`` header and a trailing newline are accepted.

    Args:
        text: graph6 line

    Returns:
        The decoded graph

    Raises:
        Graph6DecodeError: On a malformed header, a non-printable byte, truncated
            data, non-zero padding bits or trailing garbage; ``offset`` names the byte
    """
    line = text.rstrip("\r\n")
    shift = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        shift = len(GRAPH6_HEADER)

    n, body_start = _decode_order(line, shift)
    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    available = len(line) - body_start

    values = []
    for offset in range(body_start, body_start + min(needed, available)):
        values.append(_check_printable(line, offset, shift))
    if available < needed:
        raise Graph6DecodeError(
            f"truncated adjacency data: expected {needed} bytes, found {available}",
            len(line) + shift,
            line,
        )
    if available > needed:
        raise Graph6DecodeError("trailing garbage", body_start + needed + shift, line)

    padding = needed * 6 - bit_count
    if padding and values[-1] & ((1 << padding) - 1):
        raise Graph6DecodeError("non-zero padding bits", body_start + needed - 1 + shift, line)

    edges: List[Edge] = []
    position = 0
    for j in range(1, n):
        for i in range(j):
            value = values[position // 6]
            if value >> (5 - position % 6) & 1:
                edges.append((i, j))
            position += 1
    return build_graph(n, edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """
    Number the graph lines of a graph6 stream from 0.

    Blank lines and a bare ``>>graph6<<`` header line are skipped.
    """
    index = 0
    for raw in lines:
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        yield index, line
        index += 1


def read_graph6_stream(
    lines: Iterable[str],
) -> Iterator[Tuple[int, str, Union[Graph, Graph6DecodeError]]]:
    """Decode a graph6 stream lazily, yielding ``(index, line, graph_or_error)``."""
    for index, line in iter_graph6_lines(lines):
        try:
            yield index, line, decode_graph6(line)
        except Graph6DecodeError as error:
            logger.debug(f"line {index}: {error}")
            yield index, line, error


def _is_decimal(token: str) -> bool:
    # str.isdigit alone admits superscripts and other non-ASCII digits
    return token.isascii() and token.isdigit()


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list text format: a ``n m`` line followed by ``m`` lines ``u v``.

    Integer labels in ``0..n-1`` are used as they are; any other tokens are
    names, mapped to free labels in first-seen order. Blank lines and lines
    starting with ``#`` are ignored.

    Raises:
        EdgeListError: On a malformed header or edge line, a count mismatch or
            more distinct names than vertices
    """
    content = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content:
        raise EdgeListError("missing 'n m' header", 1)
    header_number, header = content[0]
    if len(header) != 2 or not all(_is_decimal(token) for token in header):
        raise EdgeListError("header must be two non-negative integers 'n m'", header_number)
    n, m = int(header[0]), int(header[1])

    pairs = []
    for number, tokens in content[1:]:
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {' '.join(tokens)!r}", number)
        pairs.append((number, tokens))
    if len(pairs) != m:
        raise EdgeListError(f"header declares {m} edges, found {len(pairs)}", header_number)

    def numeric(token: str) -> bool:
        return _is_decimal(token) and int(token) < n

    tokens_seen = [token for _, pair in pairs for token in pair]
    labels: Dict[str, int] = {}
    if all(numeric(token) for token in tokens_seen):
        labels = {token: int(token) for token in tokens_seen}
    else:
        for token in tokens_seen:
            if token not in labels:
                labels[token] = len(labels)

    edges = []
    for number, (u, v) in pairs:
        if labels[u] >= n or labels[v] >= n:
            raise EdgeListError(f"more distinct vertices than the declared {n}", number)
        if labels[u] == labels[v]:
            raise EdgeListError(f"loop at {u!r}", number)
        edges.append((labels[u], labels[v]))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render ``g`` in the edge-list text format."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
