"""
Per-graph scan pipeline over graph6 streams.

Work fans out to a process pool in bounded windows and comes back in input
order, so output is identical for any number of workers. Each task turns one
numbered graph6 line into a JSON-ready record.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import islice
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .characterization import (
    H3Attachment,
    classify,
    predicate_sdiam4_is_3,
    predicate_sdiam4_is_4,
    predicate_sdiam_k_is_nminus1,
)
from .config import Config, get_default_config
from .exceptions import Graph6DecodeError, SteinerToolkitError
from .formats import decode_graph6, iter_graph6_lines
from .graph import Graph, complement, is_connected, non_cut_vertices
from .metrics import (
    average_steiner_distance,
    distance_engine,
    steiner_diameter,
    steiner_profile,
    steiner_wiener_index,
)
from .utils.bits import k_subset_masks

logger = logging.getLogger(__name__)

Record = Dict[str, Any]
NumberedLine = Tuple[int, str]

METRICS = ("sdiam", "srad", "ecc", "center", "wiener", "avg")
CHECKS = ("thm2", "thm3", "lemma1", "corollary1", "lemma2")
DEFAULT_KS = (3, 4)

PROGRESS_EVERY = 10000


def ordered_map(
    task: Callable[[NumberedLine], Record],
    items: Iterable[NumberedLine],
    jobs: int = 1,
    chunk_size: int = 64,
) -> Iterator[Record]:
    """
    Apply ``task`` to every item and yield the results in input order.

    ``jobs == 1`` runs in-process. Otherwise items are submitted to a process
    pool one window of ``jobs * chunk_size * 4`` items at a time.
    """
    if jobs <= 1:
        for item in items:
            yield task(item)
        return

    iterator = iter(items)
    window = jobs * chunk_size * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            batch = list(islice(iterator, window))
            if not batch:
                break
            yield from pool.map(task, batch, chunksize=chunk_size)


def _decode(item: NumberedLine) -> Tuple[Optional[Graph], Record]:
    index, line = item
    record: Record = {"index": index, "graph6": line}
    try:
        return decode_graph6(line), record
    except Graph6DecodeError as error:
        record["error"] = str(error)
        return None, record


def compute_task(
    item: NumberedLine,
    k: int,
    metric: str,
    method: str = "auto",
    config: Optional[Config] = None,
) -> Record:
    """One ``{index, n, k, metric, value}`` record, or an ``error`` record."""
    graph, record = _decode(item)
    if graph is None:
        return record
    record.update({"n": graph.n, "k": k, "metric": metric})
    try:
        if metric == "sdiam":
            value: Any = steiner_diameter(graph, k, method, config)
        elif metric == "wiener":
            value = steiner_wiener_index(graph, k, method, config)
        elif metric == "avg":
            value = str(average_steiner_distance(graph, k, method, config))
        else:
            profile = steiner_profile(graph, k, method, config)
            value = {
                "srad": profile.radius,
                "ecc": list(profile.eccentricities),
                "center": list(profile.center),
            }[metric]
    except SteinerToolkitError as error:
        record["error"] = str(error)
        return record
    record["value"] = value
    return record


def classify_task(
    item: NumberedLine,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
    method: str = "auto",
    config: Optional[Config] = None,
) -> Record:
    """A ClassificationRecord as a dict with ``index`` and ``graph6``, or an ``error`` record."""
    graph, record = _decode(item)
    if graph is None:
        return record
    try:
        result = classify(graph, attachment, method, config, graph6=item[1])
    except SteinerToolkitError as error:
        record["error"] = str(error)
        return record
    return {"index": item[0], **result.to_dict()}


def _check_ranges(check: str, n: int, ks: Sequence[int]) -> List[Optional[int]]:
    """The ``k`` values ``check`` applies to at order ``n`` (``[None]`` for k-free checks)."""
    if check == "thm2":
        return [None] if n >= 4 else []
    if check == "thm3":
        return [None] if n >= 5 else []
    upper = {"lemma1": n - 1, "corollary1": n - 2, "lemma2": n}[check]
    return [k for k in ks if 3 <= k <= upper]


def verify_task(
    item: NumberedLine,
    checks: Sequence[str] = CHECKS,
    ks: Sequence[int] = DEFAULT_KS,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
    method: str = "auto",
    config: Optional[Config] = None,
) -> Record:
    """
    Compare each requested predicate with the computed Steiner diameters.

    The record carries ``status`` (``ok``, ``skipped`` or ``error``), the
    number of checks run, and one counterexample entry per mismatch.
    """
    graph, record = _decode(item)
    if graph is None:
        record["status"] = "error"
        return record
    if not is_connected(graph):
        record.update({"status": "skipped", "reason": "disconnected"})
        return record

    plan = [(check, k) for check in checks for k in _check_ranges(check, graph.n, ks)]
    if not plan:
        record.update({"status": "skipped", "reason": f"order {graph.n} outside every check"})
        return record

    try:
        counterexamples = _run_checks(graph, plan, attachment, method, config)
    except SteinerToolkitError as error:
        record.update({"status": "error", "error": str(error)})
        return record

    record.update({"status": "ok", "checks": len(plan), "counterexamples": counterexamples})
    return record


def _run_checks(
    graph: Graph,
    plan: Sequence[Tuple[str, Optional[int]]],
    attachment: H3Attachment,
    method: str,
    config: Optional[Config],
) -> List[Record]:
    engine = distance_engine(graph, method, config)
    cache: Dict[int, int] = {}

    def sdiam(k: int) -> int:
        if k not in cache:
            cache[k] = max(engine(mask) for mask in k_subset_masks(range(graph.n), k))
        return cache[k]

    n = graph.n
    counterexamples = []
    for check, k in plan:
        if check == "thm2":
            expected, got = sdiam(4) == 3, predicate_sdiam4_is_3(graph)
        elif check == "thm3":
            expected, got = sdiam(4) == 4, bool(predicate_sdiam4_is_4(graph, attachment))
        elif check == "lemma1":
            assert k is not None
            expected, got = sdiam(k) == n - 1, predicate_sdiam_k_is_nminus1(graph, k)
        elif check == "corollary1":
            assert k is not None
            expected, got = sdiam(k) <= n - 2, len(non_cut_vertices(graph)) >= k + 1
        else:
            assert k is not None
            expected = True
            got = sdiam(k) != k - 1 or complement(graph).max_degree <= k - 2
        if expected != got:
            name = check if k is None else f"{check}[k={k}]"
            counterexamples.append(
                {"check": name, "expected": expected, "got": got, "sdiam": dict(sorted(cache.items()))}
            )
    return counterexamples


@dataclass
class Counterexample:
    """One predicate that disagreed with the computed value."""

    index: int
    graph6: str
    check: str
    expected: bool
    got: bool
    sdiam: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Record:
        return {
            "counterexample": {
                "index": self.index,
                "graph6": self.graph6,
                "check": self.check,
                "expected": self.expected,
                "got": self.got,
                "sdiam": {str(k): v for k, v in self.sdiam.items()},
            }
        }


@dataclass
class RunReport:
    """
    Outcome of a verification scan.

    The exit code is 0 for a clean run, 1 when a counterexample was found
    and 2 when an input line could not be decoded.
    """

    graphs_processed: int = 0
    checks_run: int = 0
    skipped: int = 0
    input_errors: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        if self.input_errors:
            return 2
        return 1 if self.counterexamples else 0

    def add(self, record: Record) -> List[Counterexample]:
        """Fold one ``verify_task`` record in and return its counterexamples."""
        self.graphs_processed += 1
        status = record.get("status")
        if status == "error":
            self.input_errors += 1
            return []
        if status == "skipped":
            self.skipped += 1
            return []
        self.checks_run += record["checks"]
        found = [
            Counterexample(record["index"], record["graph6"], **entry)
            for entry in record["counterexamples"]
        ]
        self.counterexamples.extend(found)
        return found

    def summary(self) -> Record:
        """JSON-ready summary without wall time, so it is stable across runs."""
        return {
            "summary": {
                "graphs_processed": self.graphs_processed,
                "checks_run": self.checks_run,
                "skipped": self.skipped,
                "input_errors": self.input_errors,
                "counterexamples": len(self.counterexamples),
                "exit_code": self.exit_code,
            }
        }


def run_verify(
    lines: Iterable[str],
    checks: Sequence[str] = CHECKS,
    ks: Sequence[int] = DEFAULT_KS,
    attachment: H3Attachment = H3Attachment.OPPOSITE,
    method: str = "auto",
    config: Optional[Config] = None,
    on_counterexample: Optional[Callable[[Counterexample], None]] = None,
    on_error: Optional[Callable[[Record], None]] = None,
) -> RunReport:
    """
    Verify every graph of a graph6 stream and collect a RunReport.

    Counterexamples and undecodable lines are handed to the callbacks as soon
    as they arrive, in input order.
    """
    config = config or get_default_config()
    unknown = sorted(set(checks) - set(CHECKS))
    if unknown:
        raise SteinerToolkitError(f"unknown checks: {', '.join(unknown)}")

    task = partial(
        verify_task,
        checks=tuple(checks),
        ks=tuple(ks),
        attachment=H3Attachment(attachment),
        method=method,
        config=config,
    )
    report = RunReport()
    start = time.perf_counter()
    for record in ordered_map(task, iter_graph6_lines(lines), config.jobs, config.chunk_size):
        for counterexample in report.add(record):
            if on_counterexample:
                on_counterexample(counterexample)
        if record.get("status") == "error" and on_error:
            on_error(record)
        if report.graphs_processed % PROGRESS_EVERY == 0:
            logger.info(
                f"{report.graphs_processed} graphs verified, "
                f"{len(report.counterexamples)} counterexamples"
            )
    report.elapsed = time.perf_counter() - start
    return report


def run_records(
    lines: Iterable[str],
    task: Callable[[NumberedLine], Record],
    config: Optional[Config] = None,
) -> Iterator[Record]:
    """Stream ``task`` records for every graph line in input order."""
    config = config or get_default_config()
    yield from ordered_map(task, iter_graph6_lines(lines), config.jobs, config.chunk_size)
