"""Benchmark harness: seeded query workloads, equality-gated timings, reports.

A run builds one ordering and one index for the input graph, then walks the
configured (task, size class) grid. Every cell draws its query sets from a
seed derived from (run seed, task, size class), runs each query through both
the indexed engine and the baseline, verifies the two results are identical,
and only then accounts the timings. A result mismatch aborts the run: a
benchmark over wrong answers is worthless.

Timing fields can be suppressed (``measure_time=False``) to make reports
byte-identical across runs; everything else is a pure function of
(graph, config, seed).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .baseline import naive_neighbourhood_count, naive_trace_frequencies, naive_trace_list
from .graph import Graph, OrderedGraph
from .graphio import read_ordering
from .index import build
from .ordering import (
    TwoReachSets,
    best_ordering,
    degeneracy_order,
    degree_order,
    evaluate_ordering,
    two_reach,
)
from .query import neighbourhood_count, trace_frequencies, trace_list

TASKS = ("count", "list", "freq")
DEFAULT_SIZES: tuple[str | int, ...] = ("log", 10, 50, "sqrt")

CSV_COLUMNS = (
    "network",
    "task",
    "algorithm",
    "size_class",
    "size",
    "queries",
    "setup_ms",
    "total_ms",
    "mean_us",
    "checksum",
    "status",
)


class ResultMismatch(RuntimeError):
    """Indexed and baseline answers disagreed on a benchmark query."""


@dataclass(frozen=True)
class BenchConfig:
    tasks: tuple[str, ...] = TASKS
    sizes: tuple[str | int, ...] = DEFAULT_SIZES
    queries: int = 1000
    seed: int = 0
    ordering: str = "best"  # degeneracy | degree | best | file:<path>
    network: str = "graph"
    time_limit: float | None = None  # seconds per (task, size) cell
    measure_time: bool = True

    def __post_init__(self) -> None:
        if self.queries < 1:
            raise ValueError("queries-per-class must be at least 1")
        unknown = set(self.tasks) - set(TASKS)
        if unknown:
            raise ValueError(f"unknown tasks: {sorted(unknown)}")


@dataclass(frozen=True)
class BenchRow:
    network: str
    task: str
    algorithm: str
    size_class: str
    size: int
    queries: int
    setup_ms: float | None
    total_ms: float | None
    mean_us: float | None
    checksum: str
    status: str  # ok | skipped | timeout


def generate_query_sets(g: Graph, size: int, k: int, seed: int) -> list[list[int]]:
    """k uniform random size-subsets of V(g), ascending ids, seed-determined.

    Draws are independent across the k sets (repeats across sets possible).
    Each set comes from a partial Fisher-Yates pass over the id range, so it
    is uniform among all size-subsets without materializing a permutation.
    """
    n = g.n
    if size < 0 or size > n:
        raise ValueError(f"query size {size} out of range for {n} vertices")
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        swapped: dict[int, int] = {}
        picked = []
        for i in range(size):
            j = rng.randrange(i, n)
            picked.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        picked.sort()
        out.append(picked)
    return out


def resolve_ordering(g: Graph, spec: str) -> tuple[OrderedGraph, TwoReachSets, str]:
    """Turn an ordering strategy name into (ordered graph, two-reach sets)."""
    if spec == "degeneracy":
        og = degeneracy_order(g)
        return og, two_reach(og), spec
    if spec == "degree":
        og = degree_order(g)
        return og, two_reach(og), spec
    if spec == "best":
        og, tr2, stats = best_ordering(g)
        return og, tr2, stats.strategy
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        with open(path, "r", encoding="utf-8") as fh:
            og = read_ordering(g, fh.read())
        return og, two_reach(og), spec
    raise ValueError(f"unknown ordering strategy: {spec!r}")


def resolve_size(size_spec: str | int, n: int) -> tuple[str, int]:
    """Map a size class to its resolved query size for an n-vertex graph."""
    if size_spec == "log":
        return "log", max(1, math.ceil(math.log2(n))) if n else 1
    if size_spec == "sqrt":
        return "sqrt", max(1, math.ceil(math.sqrt(n)))
    size = int(size_spec)
    if size < 1:
        raise ValueError(f"size class must be at least 1, got {size}")
    return str(size), size


def cell_seed(seed: int, task: str, size_class: str) -> int:
    digest = hashlib.blake2b(f"{seed}:{task}:{size_class}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _fingerprint(task: str, result) -> bytes:
    if task == "freq":
        return repr(result.items()).encode()
    if task == "list":
        return repr(sorted(tuple(sorted(t)) for t in result)).encode()
    return repr(result).encode()


_INDEXED: dict[str, Callable] = {
    "freq": trace_frequencies,
    "list": trace_list,
    "count": neighbourhood_count,
}
_BASELINE: dict[str, Callable] = {
    "freq": naive_trace_frequencies,
    "list": naive_trace_list,
    "count": naive_neighbourhood_count,
}


def run_bench(g: Graph, cfg: BenchConfig) -> list[BenchRow]:
    """Run the full benchmark grid; see the module docstring for the rules."""
    t0 = time.perf_counter()
    og, tr2, _ = resolve_ordering(g, cfg.ordering)
    idx = build(og, tr2)
    setup_s = time.perf_counter() - t0

    rows: list[BenchRow] = []
    for task in cfg.tasks:
        indexed_fn = _INDEXED[task]
        baseline_fn = _BASELINE[task]
        for size_spec in cfg.sizes:
            size_class, size = resolve_size(size_spec, g.n)
            if size > g.n:
                for algorithm in ("indexed", "baseline"):
                    rows.append(
                        BenchRow(cfg.network, task, algorithm, size_class, size, 0, None, None, None, "", "skipped")
                    )
                continue
            query_sets = generate_query_sets(g, size, cfg.queries, cell_seed(cfg.seed, task, size_class))
            deadline = time.monotonic() + cfg.time_limit if cfg.time_limit else None
            hasher = hashlib.blake2b(digest_size=16)
            indexed_s = 0.0
            baseline_s = 0.0
            done = 0
            status = "ok"
            for qi, qs in enumerate(query_sets):
                t = time.perf_counter()
                indexed_result = indexed_fn(idx, qs)
                indexed_s += time.perf_counter() - t
                t = time.perf_counter()
                baseline_result = baseline_fn(g, qs)
                baseline_s += time.perf_counter() - t
                fp = _fingerprint(task, indexed_result)
                if fp != _fingerprint(task, baseline_result):
                    raise ResultMismatch(
                        f"task={task} size_class={size_class} query #{qi} ({qs}): "
                        f"indexed and baseline results differ"
                    )
                hasher.update(fp)
                done += 1
                if deadline is not None and time.monotonic() > deadline:
                    status = "timeout"
                    break
            checksum = hasher.hexdigest()
            for algorithm, setup, spent in (("indexed", setup_s, indexed_s), ("baseline", 0.0, baseline_s)):
                if cfg.measure_time:
                    row = BenchRow(
                        cfg.network,
                        task,
                        algorithm,
                        size_class,
                        size,
                        done,
                        setup * 1000.0,
                        (setup + spent) * 1000.0,
                        spent / done * 1e6 if done else None,
                        checksum,
                        status,
                    )
                else:
                    row = BenchRow(
                        cfg.network, task, algorithm, size_class, size, done, None, None, None, checksum, status
                    )
                rows.append(row)
    return rows


def _cell_text(value: float | None) -> str:
    return "" if value is None else f"{value:.3f}"


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            (
                r.network,
                r.task,
                r.algorithm,
                r.size_class,
                r.size,
                r.queries,
                _cell_text(r.setup_ms),
                _cell_text(r.total_ms),
                _cell_text(r.mean_us),
                r.checksum,
                r.status,
            )
        )
    return buf.getvalue()


def rows_to_json(rows: Sequence[BenchRow]) -> str:
    payload = []
    for r in rows:
        record = {col: getattr(r, col) for col in CSV_COLUMNS}
        payload.append(record)
    return json.dumps(payload, indent=2) + "\n"


def stats_report(g: Graph) -> dict:
    """Ordering statistics for both heuristics plus index size on the winner."""
    candidates = [
        evaluate_ordering("degeneracy", degeneracy_order(g)),
        evaluate_ordering("degree", degree_order(g)),
    ]
    og, tr2, stats = min(candidates, key=lambda c: c[2].s2)
    idx = build(og, tr2)
    report = {
        "n": g.n,
        "m": g.m,
        "strategy": stats.strategy,
        "d": stats.d,
        "s2": stats.s2,
        "s2_histogram": {str(size): count for size, count in sorted(stats.histogram.items())},
        "orderings": {
            c_stats.strategy: {"d": c_stats.d, "s2": c_stats.s2} for _, _, c_stats in candidates
        },
        "index": idx.memory_stats(),
    }
    return report
