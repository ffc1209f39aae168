"""Reference algorithms that answer the three queries straight off the graph.

These are the comparison baselines for the benchmark and the oracles for the
property tests, so they deliberately stay at the obvious-algorithm level:
a membership set for X, plain adjacency scans, and a dictionary keyed by
sorted member tuples. No vertex ordering, no index, no bit keys. They share
nothing with the indexed engine beyond the graph accessors and the result
type.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph
from .query import TraceMultiset


def _validated(g: Graph, xs: Iterable[int]) -> list[int]:
    members = sorted(set(xs))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is not in the graph")
    return members


def naive_trace_frequencies(g: Graph, xs: Iterable[int]) -> TraceMultiset:
    """Trace multiplicities by scanning every neighbour of X directly."""
    members = _validated(g, xs)
    xset = set(members)
    outside: set[int] = set()
    for x in members:
        outside.update(g.neighbours(x))
    outside -= xset

    acc: dict[tuple[int, ...], int] = {}
    for y in outside:
        trace = tuple(v for v in g.neighbours(y) if v in xset)
        acc[trace] = acc.get(trace, 0) + 1
    empty = (g.n - len(members)) - len(outside)
    return TraceMultiset.from_sets(tuple(members), acc, empty)


def naive_trace_list(g: Graph, xs: Iterable[int]) -> set[frozenset[int]]:
    """The distinct traces of X, by direct enumeration."""
    return naive_trace_frequencies(g, xs).support()


def naive_neighbourhood_count(g: Graph, xs: Iterable[int]) -> tuple[int, int]:
    """(|N[X]|, |N(X) minus X|) by a seen-marker sweep over X's adjacency."""
    members = _validated(g, xs)
    seen = bytearray(g.n)
    for x in members:
        seen[x] = 1
    closed = len(members)
    for x in members:
        for w in g.neighbours(x):
            if not seen[w]:
                seen[w] = 1
                closed += 1
    return closed, closed - len(members)
