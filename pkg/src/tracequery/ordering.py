"""Vertex-ordering heuristics and strongly-2-reachable sets.

For an ordered graph, the strongly-2-reachable set of a vertex u collects the
vertices w before u that are either neighbours of u or endpoints of a 2-path
u - v - w whose midpoint v comes after u. The maximum size of these sets over
all vertices (written s2 here) controls both the size of the trace index and
the per-query work, so the point of an ordering heuristic is to make it small.

Two heuristics are provided: the classic degeneracy ordering (reverse
min-degree peeling) and plain ascending-degree ordering. ``best_ordering``
evaluates both and keeps whichever gives the smaller s2.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graph import Graph, OrderedGraph, orient


def degeneracy_order(g: Graph) -> OrderedGraph:
    """Order ``g`` by reverse min-degree peeling.

    Repeatedly removes a vertex of minimum current degree (smallest id on
    ties) and returns the reverse of the removal sequence, so every vertex's
    left degree is at most the degeneracy of the graph, and the maximum left
    degree equals it.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    removal: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:  # stale entry from an earlier decrement
            continue
        removed[v] = True
        removal.append(v)
        for w in g.neighbours(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    removal.reverse()
    return orient(g, removal)


def degree_order(g: Graph) -> OrderedGraph:
    """Order ``g`` by ascending degree, ties by ascending vertex id."""
    degs = np.diff(g._indptr)
    return orient(g, np.argsort(degs, kind="stable"))


class TwoReachSets:
    """Strongly-2-reachable sets of every vertex under a fixed ordering.

    For vertex u, ``s2closed(u)`` lists u's strongly-2-reachable vertices
    followed by u itself, ascending by rank. Rows are stored in rank space
    as one CSR structure; the heavier consumers (index build, queries) read
    the rank arrays directly, everything else goes through the id-space
    accessors.
    """

    __slots__ = ("og", "d", "s2", "max_row", "row_ptr", "row_ranks", "row_ptr_list", "row_ranks_list", "_pos_cache")

    def __init__(self, og: OrderedGraph, row_ptr: np.ndarray, row_ranks: np.ndarray) -> None:
        self.og = og
        self.row_ptr = row_ptr
        self.row_ranks = row_ranks
        self.row_ptr_list = row_ptr.tolist()
        self.row_ranks_list = row_ranks.tolist()
        lens = np.diff(row_ptr)
        self.d = og.max_left_degree
        self.s2 = int(lens.max() - 1) if lens.size else 0
        self.max_row = int(lens.max()) if lens.size else 0
        self._pos_cache: list[dict[int, int] | None] = [None] * og.graph.n

    def s2closed(self, u: int) -> list[int]:
        """Members of S2(u) plus u itself, as vertex ids ascending by rank."""
        r = self.og.rank[u]
        order = self.og.order
        return [order[w] for w in self.row_ranks_list[self.row_ptr_list[r] : self.row_ptr_list[r + 1]]]

    def s2open(self, u: int) -> list[int]:
        """Members of S2(u) proper, excluding u."""
        return self.s2closed(u)[:-1]

    def positions(self, u: int) -> dict[int, int]:
        """Map from member vertex id to its index within s2closed(u)."""
        cached = self._pos_cache[u]
        if cached is None:
            cached = {w: i for i, w in enumerate(self.s2closed(u))}
            self._pos_cache[u] = cached
        return cached

    def size_histogram(self) -> dict[int, int]:
        """Histogram of |S2(u)| over all vertices (u itself not counted)."""
        if self.og.graph.n == 0:
            return {}
        sizes, counts = np.unique(np.diff(self.row_ptr) - 1, return_counts=True)
        return dict(zip(sizes.tolist(), counts.tolist()))

    def __repr__(self) -> str:
        return f"TwoReachSets(n={self.og.graph.n}, d={self.d}, s2={self.s2})"


def two_reach(og: OrderedGraph) -> TwoReachSets:
    """Materialize all strongly-2-reachable sets of the ordered graph.

    Works in rank space. Membership pairs come from two sources: every left
    edge (u, w) directly, and for every vertex v, every ordered pair w < u
    within v's left neighbourhood (v is then a later midpoint for u). The
    within-row pair generation is batched over rows of equal length so the
    whole construction stays vectorized; total work is proportional to the
    number of generated pairs, i.e. O(d * m).
    """
    n = og.graph.n
    lptr, lidx = og._lptr, og._lidx
    lens = np.diff(lptr)
    parts_u = [np.repeat(np.arange(n, dtype=np.int64), lens), np.arange(n, dtype=np.int64)]
    parts_w = [lidx, np.arange(n, dtype=np.int64)]
    for k in np.unique(lens).tolist():
        if k < 2:
            continue
        rows = np.nonzero(lens == k)[0]
        block = lidx[lptr[rows][:, None] + np.arange(k)]
        ii, jj = np.triu_indices(k, 1)
        parts_u.append(block[:, jj].ravel())
        parts_w.append(block[:, ii].ravel())
    enc = np.unique(np.concatenate(parts_u) * n + np.concatenate(parts_w)) if n else np.zeros(0, np.int64)
    rows = enc // n if n else enc
    row_ptr = np.zeros(n + 1, dtype=np.int64)
    if enc.size:
        np.cumsum(np.bincount(rows, minlength=n), out=row_ptr[1:])
    return TwoReachSets(og, row_ptr, enc % n if n else enc)


@dataclass(frozen=True)
class OrderingStats:
    """Summary of one ordering: its strategy name, d, s2, and size spread."""

    strategy: str
    d: int
    s2: int
    histogram: dict[int, int]


def evaluate_ordering(strategy: str, og: OrderedGraph) -> tuple[OrderedGraph, TwoReachSets, OrderingStats]:
    tr2 = two_reach(og)
    return og, tr2, OrderingStats(strategy, tr2.d, tr2.s2, tr2.size_histogram())


def best_ordering(g: Graph) -> tuple[OrderedGraph, TwoReachSets, OrderingStats]:
    """Evaluate both heuristics and keep the ordering with the smaller s2.

    Ties go to the degeneracy ordering.
    """
    candidates = [
        evaluate_ordering("degeneracy", degeneracy_order(g)),
        evaluate_ordering("degree", degree_order(g)),
    ]
    return min(candidates, key=lambda c: c[2].s2)
