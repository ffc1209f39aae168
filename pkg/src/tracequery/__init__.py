"""Neighbourhood-trace queries on sparse graphs.

Given a graph G and a vertex set X, the trace of an outside vertex y is
N(y) intersected with X. This package answers three queries about all such
traces at once: their multiset (how many outside vertices induce each
subset), their plain set, and the size of X's neighbourhood. The fast path
precomputes an index over a vertex ordering with small strongly-2-reachable
sets; brute-force baselines double as correctness oracles and benchmark
opponents.
"""

from .baseline import naive_neighbourhood_count, naive_trace_frequencies, naive_trace_list
from .bench import (
    BenchConfig,
    BenchRow,
    ResultMismatch,
    generate_query_sets,
    resolve_ordering,
    rows_to_csv,
    rows_to_json,
    run_bench,
    stats_report,
)
from .graph import Graph, OrderedGraph, from_edges, orient
from .graphio import FormatError, load_graph, parse_edge_list, read_ordering, write_ordering
from .index import TraceIndex, build as build_index
from .ordering import (
    OrderingStats,
    TwoReachSets,
    best_ordering,
    degeneracy_order,
    degree_order,
    evaluate_ordering,
    two_reach,
)
from .query import QuerySet, TraceMultiset, neighbourhood_count, trace_frequencies, trace_list

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchRow",
    "FormatError",
    "Graph",
    "OrderedGraph",
    "OrderingStats",
    "QuerySet",
    "ResultMismatch",
    "TraceIndex",
    "TraceMultiset",
    "TwoReachSets",
    "best_ordering",
    "build_index",
    "degeneracy_order",
    "degree_order",
    "evaluate_ordering",
    "from_edges",
    "generate_query_sets",
    "load_graph",
    "naive_neighbourhood_count",
    "naive_trace_frequencies",
    "naive_trace_list",
    "neighbourhood_count",
    "orient",
    "parse_edge_list",
    "read_ordering",
    "resolve_ordering",
    "rows_to_csv",
    "rows_to_json",
    "run_bench",
    "stats_report",
    "trace_frequencies",
    "trace_list",
    "two_reach",
    "write_ordering",
]
