from __future__ import annotations

from collections import Counter

import pytest

import tracequery.bench as bench_module
from tracequery import (
    BenchConfig,
    ResultMismatch,
    generate_query_sets,
    resolve_ordering,
    rows_to_csv,
    rows_to_json,
    run_bench,
    stats_report,
    write_ordering,
)
from tracequery.bench import CSV_COLUMNS, cell_seed, resolve_size
from tracequery.generate import complete, cycle, empty, gnp, grid, path


def test_query_sets_of_full_size_are_the_vertex_set():
    g = empty(6)
    for s in generate_query_sets(g, 6, 4, 123):
        assert s == list(range(6))


def test_query_sets_are_seed_deterministic_and_sorted():
    g = empty(50)
    a = generate_query_sets(g, 7, 20, 9)
    b = generate_query_sets(g, 7, 20, 9)
    assert a == b
    assert generate_query_sets(g, 7, 20, 10) != a
    for s in a:
        assert s == sorted(s)
        assert len(set(s)) == 7


def test_query_sets_inclusion_frequency_is_uniform():
    g = empty(10)
    sets = generate_query_sets(g, 3, 1000, 7)
    freq = Counter(v for s in sets for v in s)
    for v in range(10):
        assert abs(freq[v] / 1000 - 0.3) <= 0.05


def test_query_sets_reject_oversized_requests():
    with pytest.raises(ValueError, match="out of range"):
        generate_query_sets(empty(4), 5, 1, 0)


def test_resolve_size_classes():
    assert resolve_size("log", 250000) == ("log", 18)
    assert resolve_size("log", 1) == ("log", 1)
    assert resolve_size("sqrt", 250000) == ("sqrt", 500)
    assert resolve_size("sqrt", 10) == ("sqrt", 4)
    assert resolve_size(10, 100) == ("10", 10)
    with pytest.raises(ValueError):
        resolve_size(0, 100)


def test_cell_seed_is_stable_and_distinct():
    assert cell_seed(1, "freq", "log") == cell_seed(1, "freq", "log")
    assert cell_seed(1, "freq", "log") != cell_seed(1, "freq", "sqrt")
    assert cell_seed(1, "freq", "log") != cell_seed(2, "freq", "log")


def test_run_bench_on_cycle_emits_matching_pairs():
    rows = run_bench(cycle(4), BenchConfig(tasks=("freq",), sizes=(1,), queries=2, seed=1, network="c4"))
    assert len(rows) == 2
    indexed, baseline = rows
    assert (indexed.algorithm, baseline.algorithm) == ("indexed", "baseline")
    assert indexed.checksum == baseline.checksum != ""
    assert indexed.status == baseline.status == "ok"
    assert indexed.queries == baseline.queries == 2
    assert indexed.network == "c4"
    assert indexed.setup_ms is not None and indexed.setup_ms >= 0
    assert baseline.setup_ms == 0.0
    assert indexed.total_ms >= indexed.setup_ms


def test_run_bench_skips_oversized_classes():
    rows = run_bench(cycle(4), BenchConfig(tasks=("count",), sizes=(10,), queries=3))
    assert [r.status for r in rows] == ["skipped", "skipped"]
    assert all(r.queries == 0 and r.checksum == "" for r in rows)


def test_run_bench_timeout_flags_partial_cells():
    rows = run_bench(cycle(4), BenchConfig(tasks=("freq",), sizes=(2,), queries=50, time_limit=1e-9))
    assert all(r.status == "timeout" for r in rows)
    assert all(0 < r.queries < 50 for r in rows)


def test_run_bench_grid_covers_all_tasks_and_sizes():
    g = gnp(30, 0.2, 77)
    cfg = BenchConfig(sizes=("log", 5, "sqrt"), queries=4, seed=3, measure_time=False)
    rows = run_bench(g, cfg)
    assert len(rows) == 3 * 3 * 2
    assert {(r.task, r.size_class, r.algorithm) for r in rows} == {
        (t, s, a) for t in ("count", "list", "freq") for s in ("log", "5", "sqrt") for a in ("indexed", "baseline")
    }
    assert all(r.status == "ok" for r in rows)
    assert all(r.setup_ms is None and r.total_ms is None and r.mean_us is None for r in rows)


def test_run_bench_is_deterministic_without_times():
    g = gnp(25, 0.25, 5)
    cfg = BenchConfig(sizes=("log", 3), queries=5, seed=11, measure_time=False)
    assert run_bench(g, cfg) == run_bench(g, cfg)
    assert rows_to_csv(run_bench(g, cfg)) == rows_to_csv(run_bench(g, cfg))


def test_run_bench_nontiming_fields_stable_across_timed_runs():
    g = gnp(20, 0.3, 6)
    cfg = BenchConfig(tasks=("freq", "count"), sizes=(2,), queries=4, seed=2)
    strip = lambda rows: [(r.network, r.task, r.algorithm, r.size_class, r.size, r.queries, r.checksum, r.status) for r in rows]
    assert strip(run_bench(g, cfg)) == strip(run_bench(g, cfg))


def test_result_mismatch_aborts_the_run(monkeypatch):
    monkeypatch.setitem(bench_module._BASELINE, "count", lambda g, xs: (-1, -1))
    with pytest.raises(ResultMismatch, match="differ"):
        run_bench(cycle(4), BenchConfig(tasks=("count",), sizes=(1,), queries=1))


def test_config_validation():
    with pytest.raises(ValueError, match="at least 1"):
        BenchConfig(queries=0)
    with pytest.raises(ValueError, match="unknown tasks"):
        BenchConfig(tasks=("freq", "nope"))


def test_csv_shape():
    rows = run_bench(cycle(4), BenchConfig(tasks=("list",), sizes=(1,), queries=2, measure_time=False))
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[0] == "graph"
    assert first[6] == first[7] == first[8] == ""  # suppressed timing cells


def test_json_shape():
    rows = run_bench(cycle(4), BenchConfig(tasks=("count",), sizes=(1,), queries=2, measure_time=False))
    import json

    payload = json.loads(rows_to_json(rows))
    assert len(payload) == 2
    assert set(payload[0]) == set(CSV_COLUMNS)
    assert payload[0]["setup_ms"] is None


def test_ordering_from_file(tmp_path):
    g = path(4)
    og, _, _ = resolve_ordering(g, "degeneracy")
    f = tmp_path / "order.txt"
    f.write_text(write_ordering(og), encoding="utf-8")
    og2, tr2, name = resolve_ordering(g, f"file:{f}")
    assert og2.rank == og.rank
    assert name == f"file:{f}"
    assert tr2.og is og2


def test_resolve_ordering_rejects_unknown_strategy():
    with pytest.raises(ValueError, match="unknown ordering strategy"):
        resolve_ordering(path(3), "fastest")


def test_stats_report_on_complete_graph():
    rep = stats_report(complete(4))
    assert (rep["n"], rep["m"]) == (4, 6)
    assert rep["orderings"] == {"degeneracy": {"d": 3, "s2": 3}, "degree": {"d": 3, "s2": 3}}
    assert rep["strategy"] == "degeneracy"
    assert (rep["d"], rep["s2"]) == (3, 3)


def test_stats_report_on_grid_and_path():
    rep = stats_report(grid(50, 50))
    assert rep["s2"] <= 8
    assert sum(rep["s2_histogram"].values()) == 2500
    rep = stats_report(path(5))
    assert (rep["strategy"], rep["d"], rep["s2"]) == ("degeneracy", 1, 1)
    assert rep["index"]["total_keys"] == 4
