"""Brute-force oracles used only by the tests.

Everything here is written for obviousness, not speed, and independently of
the package's own algorithms: direct quantifier evaluation over vertex pairs,
dictionaries keyed by frozensets, no orderings or bit tricks.
"""

from __future__ import annotations

from tracequery.graph import Graph, OrderedGraph


def brute_s2(og: OrderedGraph) -> list[set[int]]:
    """S2(u) for every u, by testing the membership condition on every pair:
    w before u, and w adjacent to u or joined to u through a later midpoint."""
    g = og.graph
    rank = og.rank
    result = []
    for u in range(g.n):
        nu = set(g.neighbours(u))
        members = set()
        for w in range(g.n):
            if w == u or rank[w] >= rank[u]:
                continue
            if w in nu:
                members.add(w)
                continue
            nw = set(g.neighbours(w))
            if any(rank[v] > rank[u] for v in nu & nw):
                members.add(w)
        result.append(members)
    return result


def brute_index_contents(og: OrderedGraph) -> list[dict[frozenset[int], int]]:
    """Expected entry(x) tables: for each later neighbour y of x, one count
    at the set of y's neighbours up to x (which always includes x)."""
    g = og.graph
    rank = og.rank
    tables: list[dict[frozenset[int], int]] = [{} for _ in range(g.n)]
    for y in range(g.n):
        left = [w for w in g.neighbours(y) if rank[w] < rank[y]]
        for x in left:
            key = frozenset(w for w in left if rank[w] <= rank[x])
            tables[x][key] = tables[x].get(key, 0) + 1
    return tables


def brute_traces(g: Graph, xs) -> dict[frozenset[int], int]:
    """Trace multiplicities by scanning every vertex outside X."""
    xset = set(xs)
    counts: dict[frozenset[int], int] = {}
    for y in range(g.n):
        if y in xset:
            continue
        trace = frozenset(v for v in g.neighbours(y) if v in xset)
        counts[trace] = counts.get(trace, 0) + 1
    counts.setdefault(frozenset(), 0)
    return counts


def brute_closed_neighbourhood(g: Graph, xs) -> int:
    out = set(xs)
    for x in set(xs):
        out.update(g.neighbours(x))
    return len(out)


def peel_degeneracy(g: Graph) -> int:
    """Degeneracy as the max degree at removal time under min-degree peeling."""
    remaining = {v: set(g.neighbours(v)) for v in range(g.n)}
    worst = 0
    while remaining:
        v = min(remaining, key=lambda u: (len(remaining[u]), u))
        worst = max(worst, len(remaining[v]))
        for w in remaining[v]:
            remaining[w].discard(v)
        del remaining[v]
    return worst


def multiset_as_dict(result) -> dict[frozenset[int], int]:
    """Project a TraceMultiset to the oracle's representation."""
    return {frozenset(t): c for t, c in result.items()}
