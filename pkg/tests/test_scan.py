"""Test the scan pipeline: per-graph tasks, ordering and run reports."""

from functools import partial

import pytest

from steiner_toolkit import scan
from steiner_toolkit.config import Config
from steiner_toolkit.exceptions import SteinerToolkitError
from steiner_toolkit.formats import encode_graph6
from steiner_toolkit.scan import (
    Counterexample,
    RunReport,
    classify_task,
    compute_task,
    ordered_map,
    run_records,
    run_verify,
    verify_task,
)

from .graphs import complete, cycle, disjoint_union, path

C5 = "Dhc"


def _line(g):
    return encode_graph6(g)


def test_ordered_map_is_independent_of_workers():
    """Test that a process pool returns the same records in the same order."""
    items = list(enumerate(_line(cycle(n)) for n in range(3, 11)))
    task = partial(compute_task, k=3, metric="sdiam")

    serial = list(ordered_map(task, items, jobs=1))
    parallel = list(ordered_map(task, items, jobs=2, chunk_size=1))

    assert serial == parallel
    assert [record["index"] for record in parallel] == list(range(8))


@pytest.mark.parametrize(
    "graph, k, metric, value",
    [
        (path(5), 4, "sdiam", 4),
        (path(5), 2, "srad", 2),
        (path(5), 2, "ecc", [4, 3, 2, 3, 4]),
        (path(5), 2, "center", [2]),
        (path(3), 2, "wiener", 4),
        (path(3), 2, "avg", "4/3"),
        (complete(6), 4, "sdiam", 3),
    ],
)
def test_compute_task_metrics(graph, k, metric, value):
    """Test one record per metric."""
    record = compute_task((0, _line(graph)), k, metric)

    assert record == {
        "index": 0,
        "graph6": _line(graph),
        "n": graph.n,
        "k": k,
        "metric": metric,
        "value": value,
    }


def test_compute_task_errors():
    """Test error records for bad lines, disconnected graphs and k out of range."""
    malformed = compute_task((3, "D?"), 2, "sdiam")
    assert malformed["index"] == 3
    assert "truncated" in malformed["error"]
    assert "value" not in malformed

    disconnected = compute_task((0, _line(disjoint_union(path(2), path(2)))), 2, "sdiam")
    assert disconnected["n"] == 4
    assert "error" in disconnected

    assert "error" in compute_task((0, _line(path(5))), 6, "sdiam")


def test_classify_task():
    """Test the classify record and its error form."""
    record = classify_task((1, C5))

    assert record["index"] == 1
    assert record["graph6"] == C5
    assert record["sdiam4"] == 3
    assert record["consistent"]
    assert "error" in classify_task((0, _line(cycle(4))))


def test_verify_task_runs_every_applicable_check():
    """Test the check plan on C5: thm2, thm3, two lemma1, one corollary1, two lemma2."""
    record = verify_task((0, C5))

    assert record["status"] == "ok"
    assert record["checks"] == 7
    assert record["counterexamples"] == []


def test_verify_task_skips():
    """Test that disconnected and too-small graphs are skipped."""
    disconnected = verify_task((0, _line(disjoint_union(path(3), path(2)))))
    assert disconnected["status"] == "skipped"
    assert disconnected["reason"] == "disconnected"

    tiny = verify_task((0, _line(path(2))))
    assert tiny["status"] == "skipped"

    assert verify_task((0, "D?"))["status"] == "error"


def test_verify_task_reports_a_corrupted_predicate(monkeypatch):
    """Test that a broken predicate shows up as a counterexample."""
    monkeypatch.setattr(scan, "predicate_sdiam4_is_3", lambda g: False)

    record = verify_task((0, C5), checks=("thm2",))

    assert record["counterexamples"] == [
        {"check": "thm2", "expected": True, "got": False, "sdiam": {4: 3}}
    ]


def test_verify_task_names_k_dependent_checks(monkeypatch):
    """Test that k-dependent counterexamples carry k in their name."""
    monkeypatch.setattr(scan, "predicate_sdiam_k_is_nminus1", lambda g, k: k == 3)

    record = verify_task((0, _line(path(5))), checks=("lemma1",))

    assert [entry["check"] for entry in record["counterexamples"]] == ["lemma1[k=4]"]


def test_run_report_exit_codes():
    """Test 0 for clean runs, 1 for counterexamples and 2 for input errors."""
    report = RunReport()
    report.add({"status": "ok", "checks": 3, "counterexamples": [], "index": 0, "graph6": C5})
    assert report.exit_code == 0

    found = report.add(
        {
            "status": "ok",
            "checks": 1,
            "index": 1,
            "graph6": C5,
            "counterexamples": [{"check": "thm2", "expected": True, "got": False, "sdiam": {4: 3}}],
        }
    )
    assert found[0].check == "thm2"
    assert report.exit_code == 1

    report.add({"status": "error", "index": 2, "graph6": "D?", "error": "bad"})
    report.add({"status": "skipped", "index": 3, "graph6": "A_"})
    assert report.exit_code == 2
    assert report.summary() == {
        "summary": {
            "graphs_processed": 4,
            "checks_run": 4,
            "skipped": 1,
            "input_errors": 1,
            "counterexamples": 1,
            "exit_code": 2,
        }
    }


def test_counterexample_to_dict():
    """Test the JSON form with string keys for k."""
    counterexample = Counterexample(5, C5, "lemma1[k=3]", False, True, {3: 3, 4: 4})

    assert counterexample.to_dict()["counterexample"]["sdiam"] == {"3": 3, "4": 4}
    assert counterexample.to_dict()["counterexample"]["index"] == 5


def test_run_verify_on_order_6(connected_corpus):
    """Test that the sdiam4 = 3 scan is clean on every connected graph of order 6."""
    lines = [_line(g) for g in connected_corpus[6]]

    report = run_verify(lines, checks=("thm2",), config=Config(jobs=1))

    assert report.exit_code == 0
    assert report.graphs_processed == 112
    assert report.checks_run == 112
    assert report.elapsed >= 0


def test_run_verify_streams_counterexamples(monkeypatch, connected_corpus):
    """Test the harness self-check: a corrupted predicate makes the scan fail."""
    monkeypatch.setattr(scan, "predicate_sdiam4_is_3", lambda g: not g.n)
    seen = []

    report = run_verify(
        [_line(g) for g in connected_corpus[5]],
        checks=("thm2",),
        config=Config(jobs=1),
        on_counterexample=seen.append,
    )

    assert report.exit_code == 1
    assert seen == report.counterexamples
    assert seen


def test_run_verify_input_errors():
    """Test that undecodable lines are reported and force exit code 2."""
    errors = []

    report = run_verify([C5, "D?"], config=Config(jobs=1), on_error=errors.append)

    assert report.input_errors == 1
    assert report.exit_code == 2
    assert errors[0]["index"] == 1


def test_verify_task_turns_engine_limits_into_error_records():
    """Test that a graph beyond the table cap becomes an error record."""
    config = Config(jobs=1, max_oracle_n=6, table_max_n=6)

    record = verify_task((3, _line(cycle(7))), method="table", config=config)

    assert record["status"] == "error"
    assert record["index"] == 3
    assert "limited to n <= 6" in record["error"]


def test_run_verify_continues_past_engine_limits():
    """Test that the scan keeps going after a graph the engine refuses."""
    config = Config(jobs=1, max_oracle_n=6, table_max_n=6)
    errors = []

    report = run_verify(
        [_line(cycle(7)), C5],
        checks=("thm2",),
        method="table",
        config=config,
        on_error=errors.append,
    )

    assert report.graphs_processed == 2
    assert report.input_errors == 1
    assert report.checks_run == 1
    assert report.exit_code == 2
    assert [error["index"] for error in errors] == [0]


def test_run_verify_rejects_unknown_checks():
    """Test check name validation."""
    with pytest.raises(SteinerToolkitError, match="unknown checks: thm9"):
        run_verify([C5], checks=("thm9",), config=Config(jobs=1))


def test_run_records_keeps_input_order():
    """Test that records follow input lines, skipping blanks and the header."""
    lines = [">>graph6<<" + C5, "", _line(path(5)), _line(complete(6))]
    task = partial(compute_task, k=4, metric="sdiam")

    records = list(run_records(lines, task, Config(jobs=1)))

    assert [record["value"] for record in records] == [3, 4, 3]
    assert [record["index"] for record in records] == [0, 1, 2]
