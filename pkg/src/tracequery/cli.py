"""Command-line front end: ``stats``, ``query``, and ``bench`` subcommands.

Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 result
mismatch between the indexed engine and the baseline.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (
    DEFAULT_SIZES,
    TASKS,
    BenchConfig,
    ResultMismatch,
    resolve_ordering,
    rows_to_csv,
    rows_to_json,
    run_bench,
    stats_report,
)
from .graphio import FormatError, load_graph
from .index import build
from .query import neighbourhood_count, trace_frequencies, trace_list

USAGE_ERROR = 1
INPUT_ERROR = 2
MISMATCH_ERROR = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 1 instead of argparse's 2
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tracequery", description="Neighbourhood-trace queries on sparse graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="ordering and index statistics for a graph")
    p_stats.add_argument("graph", help="edge-list file")

    p_query = sub.add_parser("query", help="answer one query, emitting JSON")
    p_query.add_argument("graph", help="edge-list file")
    p_query.add_argument("--set", default="", help="comma-separated vertex tokens (empty for the empty set)")
    p_query.add_argument("--task", choices=TASKS, default="freq")
    p_query.add_argument(
        "--ordering",
        default="best",
        help="degeneracy | degree | best | file:PATH (default: best)",
    )

    p_bench = sub.add_parser("bench", help="run the benchmark grid over a graph")
    p_bench.add_argument("graph", help="edge-list file")
    p_bench.add_argument("--tasks", default=",".join(TASKS), help="comma-separated subset of count,list,freq")
    p_bench.add_argument(
        "--sizes",
        default=",".join(str(s) for s in DEFAULT_SIZES),
        help="comma-separated size classes: log, sqrt, or integers",
    )
    p_bench.add_argument("--queries", type=int, default=1000, help="query sets per (task, size) cell")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--ordering", default="best", help="degeneracy | degree | best | file:PATH")
    p_bench.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bench.add_argument("--output", default=None, help="write the report here instead of stdout")
    p_bench.add_argument("--time-limit", type=float, default=None, help="seconds per (task, size) cell")
    p_bench.add_argument(
        "--no-times",
        action="store_true",
        help="omit wall-clock fields so the report is byte-identical across runs",
    )
    return parser


def _cmd_stats(args) -> int:
    g = load_graph(args.graph)
    print(json.dumps(stats_report(g), indent=2, sort_keys=True))
    return 0


def _trace_labels(g, ids) -> list[str]:
    return sorted(str(g.labels[v]) for v in ids)


def _check_ordering(spec: str) -> str:
    if spec in ("degeneracy", "degree", "best") or spec.startswith("file:"):
        return spec
    raise _UsageError(f"bad ordering {spec!r}: expected degeneracy, degree, best, or file:PATH")


def _cmd_query(args) -> int:
    _check_ordering(args.ordering)
    g = load_graph(args.graph)
    tokens = [t for t in args.set.split(",") if t]
    ids = []
    for token in tokens:
        try:
            ids.append(g.id_of(token))
        except ValueError as exc:
            print(f"tracequery: {exc}", file=sys.stderr)
            return INPUT_ERROR
    og, tr2, strategy = resolve_ordering(g, args.ordering)
    idx = build(og, tr2)
    payload: dict = {
        "task": args.task,
        "set": _trace_labels(g, ids),
        "ordering": strategy,
    }
    if args.task == "count":
        closed, open_ = neighbourhood_count(idx, ids)
        payload["closed"] = closed
        payload["open"] = open_
    elif args.task == "list":
        traces = trace_list(idx, ids)
        payload["traces"] = sorted((_trace_labels(g, t) for t in traces), key=lambda t: (len(t), t))
    else:
        result = trace_frequencies(idx, ids)
        labelled = [(_trace_labels(g, t), c) for t, c in result.items()]
        labelled.sort(key=lambda item: (len(item[0]), item[0]))
        payload["traces"] = [{"trace": t, "multiplicity": c} for t, c in labelled]
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_bench(args) -> int:
    _check_ordering(args.ordering)
    g = load_graph(args.graph)
    tasks = tuple(t for t in args.tasks.split(",") if t)
    sizes: list[str | int] = []
    for token in args.sizes.split(","):
        token = token.strip()
        if not token:
            continue
        if token in ("log", "sqrt"):
            sizes.append(token)
        else:
            try:
                sizes.append(int(token))
            except ValueError:
                raise _UsageError(f"bad size class {token!r}: expected log, sqrt, or an integer") from None
    try:
        cfg = BenchConfig(
            tasks=tasks,
            sizes=tuple(sizes),
            queries=args.queries,
            seed=args.seed,
            ordering=args.ordering,
            network=Path(args.graph).stem,
            time_limit=args.time_limit,
            measure_time=not args.no_times,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    rows = run_bench(g, cfg)
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"tracequery: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "query":
            return _cmd_query(args)
        return _cmd_bench(args)
    except _UsageError as exc:
        print(f"tracequery: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ResultMismatch as exc:
        print(f"tracequery: result mismatch: {exc}", file=sys.stderr)
        return MISMATCH_ERROR
    except (FormatError, OSError) as exc:
        print(f"tracequery: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except ValueError as exc:
        print(f"tracequery: {exc}", file=sys.stderr)
        return INPUT_ERROR


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
