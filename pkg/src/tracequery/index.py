"""The precomputed trace index.

For every vertex x the index stores an associative array entry(x) mapping
bit-keys to counts. The key space of entry(x) is the set s2closed(x): bit i
of a key stands for the i-th element of s2closed(x), so the key for a vertex
subset is a bit vector of length |s2closed(x)| whose last bit (x itself) is
always set. entry(x)[K] is the number of vertices y after x whose left
neighbourhood, cut off at x, decodes to exactly K. One increment is performed
per (vertex, left-neighbour) pair, so all counts sum to the edge count.

Keys are plain Python ints, which gives bitwise equality and hashing at any
width. Construction is vectorized for the common case where every key fits a
single 64-bit word; wider rows fall back to a direct Python build.
"""

from __future__ import annotations

import numpy as np

from .graph import OrderedGraph
from .ordering import TwoReachSets


class TraceIndex:
    """Immutable per-vertex key -> count tables over s2closed positions.

    Rows are rank-indexed internally; ``entry`` takes vertex ids. Keys within
    a row are sorted ascending as integers, i.e. by bit pattern, and counts
    are strictly positive.
    """

    __slots__ = ("og", "tr2", "_ptr_list", "_keys_list", "_counts_list")

    def __init__(self, og: OrderedGraph, tr2: TwoReachSets, ptr: list[int], keys: list[int], counts: list[int]) -> None:
        self.og = og
        self.tr2 = tr2
        self._ptr_list = ptr
        self._keys_list = keys
        self._counts_list = counts

    def entry(self, x: int) -> list[tuple[int, int]]:
        """The (key, count) pairs of vertex ``x``, ascending by key."""
        n = self.og.graph.n
        if not 0 <= x < n:
            raise ValueError(f"unknown vertex id: {x}")
        r = self.og.rank[x]
        lo, hi = self._ptr_list[r], self._ptr_list[r + 1]
        return list(zip(self._keys_list[lo:hi], self._counts_list[lo:hi]))

    def decode_key(self, x: int, key: int) -> list[int]:
        """Decode a key of entry(x) to vertex ids, ascending by rank."""
        row = self.tr2.s2closed(x)
        return [w for i, w in enumerate(row) if key >> i & 1]

    def key_count(self, x: int) -> int:
        r = self.og.rank[x]
        return self._ptr_list[r + 1] - self._ptr_list[r]

    def memory_stats(self) -> dict[str, int]:
        """Key totals: count, stored bits, per-vertex maximum, and the
        3 * s2^(d+1) per-vertex bound the structure is expected to obey."""
        n = self.og.graph.n
        ptr = self._ptr_list
        row_ptr = self.tr2.row_ptr_list
        total_bits = 0
        max_keys = 0
        for r in range(n):
            k = ptr[r + 1] - ptr[r]
            total_bits += k * (row_ptr[r + 1] - row_ptr[r])
            if k > max_keys:
                max_keys = k
        d, s2 = self.tr2.d, self.tr2.s2
        return {
            "total_keys": len(self._keys_list),
            "total_key_bits": total_bits,
            "max_keys_per_vertex": max_keys,
            "key_bound": 3 * s2 ** (d + 1),
        }

    def __repr__(self) -> str:
        return f"TraceIndex(n={self.og.graph.n}, total_keys={len(self._keys_list)})"


def build(og: OrderedGraph, tr2: TwoReachSets) -> TraceIndex:
    """Build the trace index for an ordered graph.

    For every vertex u and every left neighbour x of u, the growing prefix
    N-(u) up to x is encoded over s2closed(x) and counted in entry(x). The
    prefix is always a subset of s2closed(x): its members are either left
    neighbours of x or tied to x through u, which lies after x.
    """
    if tr2.og is not og:
        raise ValueError("two-reach sets were computed for a different ordered graph")
    if tr2.max_row <= 64:
        ptr, keys, counts = _build_vectorized(og, tr2)
    else:
        ptr, keys, counts = _build_python(og, tr2)
    return TraceIndex(og, tr2, ptr, keys, counts)


def _build_vectorized(og: OrderedGraph, tr2: TwoReachSets) -> tuple[list[int], list[int], list[int]]:
    """Single-word key construction, batched over left-degree classes.

    All rank pairs (anchor x, prefix member w) are generated per left row via
    the lower-triangle index pattern, their bit positions found with one
    searchsorted against the globally encoded s2closed rows, and each prefix
    key assembled by an or-reduction over its contiguous bit group.
    """
    n = og.graph.n
    lptr, lidx = og._lptr, og._lidx
    lens = np.diff(lptr)
    member_owner = np.repeat(np.arange(n, dtype=np.int64), np.diff(tr2.row_ptr)) if n else np.zeros(0, np.int64)
    row_enc = member_owner * n + tr2.row_ranks

    xs_parts: list[np.ndarray] = []
    key_parts: list[np.ndarray] = []
    for k in np.unique(lens).tolist():
        if k == 0:
            continue
        rows = np.nonzero(lens == k)[0]
        block = lidx[lptr[rows][:, None] + np.arange(k)]
        jj, ii = np.tril_indices(k)  # anchor position j, member position i <= j
        anchors = block[:, jj].ravel()
        members = block[:, ii].ravel()
        pos = np.searchsorted(row_enc, anchors * n + members) - tr2.row_ptr[anchors]
        bits = np.uint64(1) << pos.astype(np.uint64)
        group_offsets = (np.arange(k, dtype=np.int64) * (np.arange(k, dtype=np.int64) + 1)) // 2
        starts = (np.arange(len(rows), dtype=np.int64)[:, None] * (k * (k + 1) // 2) + group_offsets).ravel()
        key_parts.append(np.bitwise_or.reduceat(bits, starts))
        xs_parts.append(block.ravel())

    if xs_parts:
        xs = np.concatenate(xs_parts)
        keys = np.concatenate(key_parts)
        perm = np.lexsort((keys, xs))
        xs, keys = xs[perm], keys[perm]
        boundary = np.empty(xs.size, dtype=bool)
        boundary[0] = True
        boundary[1:] = (xs[1:] != xs[:-1]) | (keys[1:] != keys[:-1])
        starts = np.nonzero(boundary)[0]
        counts = np.diff(np.append(starts, xs.size))
        xs, keys = xs[starts], keys[starts]
    else:
        xs = np.zeros(0, np.int64)
        keys = np.zeros(0, np.uint64)
        counts = np.zeros(0, np.int64)

    ptr = np.zeros(n + 1, dtype=np.int64)
    if xs.size:
        np.cumsum(np.bincount(xs, minlength=n), out=ptr[1:])
    return ptr.tolist(), keys.tolist(), counts.tolist()


def _build_python(og: OrderedGraph, tr2: TwoReachSets) -> tuple[list[int], list[int], list[int]]:
    """Reference build over arbitrary-width keys; also the wide-row fallback."""
    n = og.graph.n
    lptr, lidx = og._lptr_list, og._lidx_list
    rptr, rranks = tr2.row_ptr_list, tr2.row_ranks_list
    pos_cache: dict[int, dict[int, int]] = {}
    entries: list[dict[int, int]] = [{} for _ in range(n)]
    for u in range(n):
        row = lidx[lptr[u] : lptr[u + 1]]
        for j, x in enumerate(row):
            pos = pos_cache.get(x)
            if pos is None:
                pos = {w: i for i, w in enumerate(rranks[rptr[x] : rptr[x + 1]])}
                pos_cache[x] = pos
            key = 0
            for i in range(j + 1):
                key |= 1 << pos[row[i]]
            table = entries[x]
            table[key] = table.get(key, 0) + 1
    ptr = [0]
    keys: list[int] = []
    counts: list[int] = []
    for table in entries:
        for key in sorted(table):
            keys.append(key)
            counts.append(table[key])
        ptr.append(len(keys))
    return ptr, keys, counts
