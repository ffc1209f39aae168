"""Immutable simple undirected graphs and ordered-graph views.

A :class:`Graph` stores a simple symmetric adjacency structure over dense
integer vertex ids together with the original input tokens ("labels").
An :class:`OrderedGraph` adds a total vertex order and partitions every
adjacency list into the neighbours that come before ("left") and after
("right") the vertex in that order.

Both classes are immutable after construction and safe to share between
any number of concurrent readers.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

import numpy as np


class Graph:
    """Simple undirected graph with dense ids and per-vertex sorted adjacency.

    Construct via :func:`from_edges` (or the parsers in ``tracequery.graphio``)
    rather than directly; the constructor trusts its arguments.
    """

    __slots__ = ("n", "m", "labels", "_adj", "_id_by_label", "_indptr", "_indices")

    def __init__(
        self,
        n: int,
        adj: list[list[int]],
        labels: tuple,
        id_by_label: dict,
        indptr: np.ndarray,
        indices: np.ndarray,
    ) -> None:
        self.n = n
        self.m = int(indices.size // 2)
        self.labels = labels
        self._adj = adj
        self._id_by_label = id_by_label
        self._indptr = indptr
        self._indices = indices

    def neighbours(self, u: int) -> list[int]:
        """Neighbour ids of ``u``, strictly increasing. Do not mutate."""
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def label(self, u: int):
        return self.labels[u]

    def id_of(self, token) -> int:
        """Dense id of an original vertex token; raises ValueError if unknown."""
        try:
            return self._id_by_label[token]
        except KeyError:
            raise ValueError(f"unknown vertex token: {token!r}") from None

    def edges(self) -> Iterable[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(
    pairs: Iterable[tuple[Hashable, Hashable]],
    vertices: Iterable[Hashable] = (),
) -> Graph:
    """Build a simple graph from an edge list of arbitrary vertex tokens.

    Tokens are mapped to dense integer ids in first-appearance order (the
    optional ``vertices`` iterable is scanned first, so isolated vertices can
    be included). Self-loops are dropped, parallel edges and both orientations
    collapse to a single undirected edge. Empty input yields the empty graph.
    """
    id_by_label: dict = {}
    labels: list = []

    def intern(token) -> int:
        i = id_by_label.get(token)
        if i is None:
            i = len(labels)
            id_by_label[token] = i
            labels.append(token)
        return i

    for token in vertices:
        intern(token)
    us: list[int] = []
    vs: list[int] = []
    for a, b in pairs:
        us.append(intern(a))
        vs.append(intern(b))

    n = len(labels)
    if us:
        ua = np.asarray(us, dtype=np.int64)
        va = np.asarray(vs, dtype=np.int64)
        lo = np.minimum(ua, va)
        hi = np.maximum(ua, va)
        keep = lo != hi  # discard self-loops
        enc = np.unique(lo[keep] * n + hi[keep])  # one code per undirected edge
        lo, hi = enc // n, enc % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        perm = np.lexsort((dst, src))
        src, dst = src[perm], dst[perm]
    else:
        src = dst = np.zeros(0, dtype=np.int64)

    indptr = np.zeros(n + 1, dtype=np.int64)
    if src.size:
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    flat = dst.tolist()
    bounds = indptr.tolist()
    adj = [flat[bounds[u] : bounds[u + 1]] for u in range(n)]
    return Graph(n, adj, tuple(labels), id_by_label, indptr, dst)


class OrderedGraph:
    """A graph together with a total vertex order.

    ``order[p]`` is the vertex occupying position ``p`` and ``rank[v]`` the
    position of vertex ``v``; the two arrays are mutually inverse. Left
    neighbours of ``v`` are the neighbours with smaller rank. Internally the
    left/right adjacency is kept in rank space (CSR rows indexed by rank,
    entries are ranks, ascending), which the heavier algorithms consume
    directly; the public accessors translate back to vertex ids.
    """

    __slots__ = (
        "graph",
        "order",
        "rank",
        "max_left_degree",
        "_rank_np",
        "_order_np",
        "_lptr",
        "_lidx",
        "_rptr",
        "_ridx",
        "_lptr_list",
        "_lidx_list",
    )

    def __init__(self, graph: Graph, order: Sequence[int]) -> None:
        n = graph.n
        order_np = np.asarray(order, dtype=np.int64)
        if order_np.shape != (n,):
            raise ValueError(f"order has {order_np.size} entries, graph has {n} vertices")
        rank_np = np.empty(n, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        if n:
            if order_np.min() < 0 or order_np.max() >= n:
                raise ValueError("order contains out-of-range vertex ids")
            seen[order_np] = True
            if not seen.all():
                raise ValueError("order is not a permutation of the vertex set")
            rank_np[order_np] = np.arange(n, dtype=np.int64)

        self.graph = graph
        self.order = order_np.tolist()
        self.rank = rank_np.tolist()
        self._rank_np = rank_np
        self._order_np = order_np

        # Directed copies of every edge in rank space, split by direction.
        deg = np.diff(graph._indptr)
        src = rank_np[np.repeat(np.arange(n, dtype=np.int64), deg)] if n else np.zeros(0, np.int64)
        dst = rank_np[graph._indices]
        left = dst < src
        self._lptr, self._lidx = _csr(n, src[left], dst[left])
        right = ~left
        self._rptr, self._ridx = _csr(n, src[right], dst[right])
        lens = np.diff(self._lptr)
        self.max_left_degree = int(lens.max()) if n else 0
        self._lptr_list = self._lptr.tolist()
        self._lidx_list = self._lidx.tolist()

    def rank_of(self, u: int) -> int:
        return self.rank[u]

    def vertex_at(self, position: int) -> int:
        return self.order[position]

    def left_neighbours(self, u: int) -> list[int]:
        """Neighbours of ``u`` preceding it in the order, ascending by rank."""
        r = self.rank[u]
        lo, hi = self._lptr_list[r], self._lptr_list[r + 1]
        return [self.order[w] for w in self._lidx_list[lo:hi]]

    def right_neighbours(self, u: int) -> list[int]:
        """Neighbours of ``u`` following it in the order, ascending by rank."""
        r = self.rank[u]
        row = self._ridx[self._rptr[r] : self._rptr[r + 1]]
        return [self.order[w] for w in row.tolist()]

    def left_degree(self, u: int) -> int:
        r = self.rank[u]
        return self._lptr_list[r + 1] - self._lptr_list[r]

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.graph.n}, m={self.graph.m}, max_left_degree={self.max_left_degree})"


def orient(g: Graph, order: Sequence[int]) -> OrderedGraph:
    """View ``g`` under a total vertex order given as a permutation of ids.

    Rejects sequences that are not permutations of the full vertex set.
    """
    return OrderedGraph(g, order)


def _csr(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rows indexed by ``src``, entries ``dst`` ascending within each row."""
    perm = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    if src.size:
        np.cumsum(np.bincount(src[perm], minlength=n), out=indptr[1:])
    return indptr, dst[perm]
