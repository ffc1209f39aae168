"""Trace-frequency, trace-listing, and neighbourhood-count queries.

All three queries run against a prebuilt :class:`~tracequery.index.TraceIndex`
and a query set X. Results speak in vertex ids; traces are canonicalized as
bitmasks over the members of X sorted ascending by id (bit i = i-th smallest
member), wrapped in :class:`TraceMultiset` at the boundary.

The frequency query works in two sweeps. The right sweep walks the stored
keys of every member x of X: each key is intersected with X by a bitwise AND
against a precomputed mask over s2closed(x), its count added at the
intersection and subtracted at the intersection minus x. Summed over the
members this telescopes so that every vertex y with a left X-neighbour
contributes +1 at its left trace and -1 at the empty trace. The left sweep
then corrects left traces to full traces for every vertex with a right
X-neighbour: it removes the left trace once and re-adds the completed trace
unless the vertex is itself a member. The empty-trace counter starts at |V|,
not |V \\ X|: the left sweep subtracts one for every vertex of the closed
left neighbourhood of X, including the members of X, and members are never
re-added, so they must start pre-counted to cancel out.

The neighbourhood count uses the same index: every vertex with a left
X-neighbour is counted at its smallest one (the stored keys whose
intersection with X is exactly {x}), and the closed left neighbourhood of X
supplies the rest, skipping vertices already counted by the first part.

Query sets below ``_VECTOR_MIN`` members run on plain Python loops; larger
ones batch the row gathering and membership filtering through numpy, which
pays off once the per-call overhead is amortized over enough members. Both
paths compute identical results; the threshold is only a speed knob.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .index import TraceIndex

_VECTOR_MIN = 16


class TraceMultiset:
    """Multiplicities of the traces of a query set X.

    A trace is the subset of X some outside vertex is adjacent to; its
    multiplicity counts those vertices. The empty trace is always carried
    explicitly (possibly with multiplicity 0, never negative); non-empty
    traces are stored only with positive multiplicity. ``members`` holds X
    sorted ascending by id, and bit i of an internal mask refers to
    ``members[i]``.
    """

    __slots__ = ("members", "_counts")

    def __init__(self, members: tuple[int, ...], counts: dict[int, int]) -> None:
        self.members = members
        self._counts = counts

    @classmethod
    def from_sets(cls, members: tuple[int, ...], set_counts: dict[tuple[int, ...], int], empty: int) -> "TraceMultiset":
        """Assemble from traces keyed by sorted member tuples."""
        pos = {v: i for i, v in enumerate(members)}
        counts = {0: empty}
        for trace, c in set_counts.items():
            mask = 0
            for v in trace:
                mask |= 1 << pos[v]
            if mask and c:
                counts[mask] = counts.get(mask, 0) + c
        return cls(members, counts)

    def multiplicity(self, trace: Iterable[int]) -> int:
        pos = {v: i for i, v in enumerate(self.members)}
        mask = 0
        for v in trace:
            i = pos.get(v)
            if i is None:
                return 0
            mask |= 1 << i
        return self._counts.get(mask, 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """(trace, multiplicity) pairs; traces as id tuples, deterministic order."""
        members = self.members
        out = []
        for mask in sorted(self._counts):
            ids = tuple(members[i] for i in range(mask.bit_length()) if mask >> i & 1)
            out.append((ids, self._counts[mask]))
        return out

    def support(self) -> set[frozenset[int]]:
        """The traces with multiplicity >= 1, as frozensets of ids."""
        members = self.members
        out = set()
        for mask, c in self._counts.items():
            if c >= 1:
                out.add(frozenset(members[i] for i in range(mask.bit_length()) if mask >> i & 1))
        return out

    def total(self) -> int:
        """Sum of all multiplicities; equals |V| - |X| on a full result."""
        return sum(self._counts.values())

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TraceMultiset):
            return NotImplemented
        return self.members == other.members and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.members, frozenset(self._counts.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{set(t) if t else '{}'}: {c}" for t, c in self.items())
        return f"TraceMultiset({{{inner}}})"


class QuerySet:
    """A validated query set with its per-member bit plumbing precomputed.

    Members are deduplicated and held both in id order (canonical output
    positions) and in rank order (processing order). For each member x, a
    mask selects the bits of s2closed(x) that lie in X; surviving key bits
    translate to canonical bits through ``bit_by_rank``. Construction costs
    O(sum of |s2closed(x)| over members).
    """

    __slots__ = (
        "index",
        "members",
        "ranks",
        "ranks_np",
        "rank_set",
        "bit_by_rank",
        "masks",
        "own_local",
        "global_bits",
    )

    def __init__(self, index: TraceIndex, xs: Iterable[int]) -> None:
        og = index.og
        n = og.graph.n
        members = sorted(set(xs))
        if members and (members[0] < 0 or members[-1] >= n):
            bad = members[0] if members[0] < 0 else members[-1]
            raise ValueError(f"vertex {bad} is not in the graph")
        self.index = index
        self.members = tuple(members)
        tr2 = index.tr2
        if len(members) >= _VECTOR_MIN and 0 < tr2.max_row <= 64:
            self._build_vector(og, tr2)
        else:
            self._build_python(og, tr2)

    def _build_python(self, og, tr2) -> None:
        rank = og.rank
        members = self.members
        by_rank = sorted(members, key=lambda v: rank[v])
        self.ranks = [rank[v] for v in by_rank]
        self.ranks_np = np.asarray(self.ranks, dtype=np.int64)
        self.rank_set = set(self.ranks)
        bit_by_id = {v: 1 << i for i, v in enumerate(members)}
        self.bit_by_rank = {rank[v]: bit_by_id[v] for v in members}
        self.global_bits = [bit_by_id[v] for v in by_rank]

        rptr, rranks = tr2.row_ptr_list, tr2.row_ranks_list
        self.masks: list[int] = []
        self.own_local: list[int] = []
        member_ranks = self.rank_set
        for r in self.ranks:
            mask = 0
            lo, hi = rptr[r], rptr[r + 1]
            for i in range(hi - lo):
                if rranks[lo + i] in member_ranks:
                    mask |= 1 << i
            self.masks.append(mask)
            self.own_local.append(1 << (hi - lo - 1))

    def _build_vector(self, og, tr2) -> None:
        members_np = np.asarray(self.members, dtype=np.int64)
        k = members_np.size
        ranks_of = og._rank_np[members_np]
        by_rank = np.argsort(ranks_of)
        ranks_np = ranks_of[by_rank]
        self.ranks_np = ranks_np
        self.ranks = ranks_np.tolist()
        self.rank_set = set(self.ranks)
        gbits = [1 << int(i) for i in by_rank]
        self.global_bits = gbits
        self.bit_by_rank = dict(zip(self.ranks, gbits))

        starts = tr2.row_ptr[ranks_np]
        lens = tr2.row_ptr[ranks_np + 1] - starts
        total = int(lens.sum())
        offs = np.cumsum(lens) - lens
        gathered = tr2.row_ranks[np.repeat(starts - offs, lens) + np.arange(total, dtype=np.int64)]
        pos_in_row = np.arange(total, dtype=np.int64) - np.repeat(offs, lens)
        loc = np.searchsorted(ranks_np, gathered)
        np.minimum(loc, k - 1, out=loc)
        valid = ranks_np[loc] == gathered
        bits = np.where(valid, np.left_shift(np.uint64(1), pos_in_row.astype(np.uint64)), np.uint64(0))
        self.masks = np.bitwise_or.reduceat(bits, offs).tolist()
        self.own_local = np.left_shift(np.uint64(1), (lens - 1).astype(np.uint64)).tolist()

    def __len__(self) -> int:
        return len(self.members)


def _as_query(index: TraceIndex, xs) -> QuerySet:
    if isinstance(xs, QuerySet):
        if xs.index is not index:
            raise ValueError("query set was prepared for a different index")
        return xs
    return QuerySet(index, xs)


def _left_sweep_python(index: TraceIndex, q: QuerySet, counters: dict[int, int]) -> None:
    lptr, lidx = index.og._lptr_list, index.og._lidx_list
    get_bit = q.bit_by_rank.get
    collected: dict[int, int] = {}
    for r, xbit in zip(q.ranks, q.global_bits):
        for u in lidx[lptr[r] : lptr[r + 1]] + [r]:
            cur = collected.get(u)
            if cur is None:
                cur = 0
                for w in lidx[lptr[u] : lptr[u + 1]]:
                    b = get_bit(w)
                    if b is not None:
                        cur |= b
                counters[cur] = counters.get(cur, 0) - 1
            collected[u] = cur | xbit
    rank_set = q.rank_set
    for u, s in collected.items():
        if u not in rank_set:
            counters[s] = counters.get(s, 0) + 1


def _left_sweep_vector(index: TraceIndex, q: QuerySet, counters: dict[int, int]) -> None:
    lptr, lidx = index.og._lptr, index.og._lidx
    ranks_np = q.ranks_np
    gbits = q.global_bits
    k = ranks_np.size
    arange_k = np.arange(k, dtype=np.int64)

    starts = lptr[ranks_np]
    lens = lptr[ranks_np + 1] - starts
    total = int(lens.sum())
    offs = np.cumsum(lens) - lens
    u_rows = lidx[np.repeat(starts - offs, lens) + np.arange(total, dtype=np.int64)]
    # Members themselves join the encounter set so each is discounted once;
    # their own collected bits are never read back, so no owner entry needed.
    encountered = np.concatenate((u_rows, ranks_np))
    owners = np.repeat(arange_k, lens)
    us, inv = np.unique(encountered, return_inverse=True)
    distinct = us.size

    # Left trace of every distinct vertex: gather its left row, keep the
    # entries that are members, fold their bits.
    s2 = lptr[us]
    l2 = lptr[us + 1] - s2
    tot2 = int(l2.sum())
    offs2 = np.cumsum(l2) - l2
    w_all = lidx[np.repeat(s2 - offs2, l2) + np.arange(tot2, dtype=np.int64)]
    loc = np.searchsorted(ranks_np, w_all)
    np.minimum(loc, k - 1, out=loc)
    hit = ranks_np[loc] == w_all
    row_of = np.repeat(np.arange(distinct, dtype=np.int64), l2)
    left_masks = [0] * distinct
    for ui, mi in zip(row_of[hit].tolist(), loc[hit].tolist()):
        left_masks[ui] |= gbits[mi]

    cget = counters.get
    counters[0] = cget(0, 0) - left_masks.count(0)
    for s in left_masks:
        if s:
            counters[s] = cget(s, 0) - 1
    collected = left_masks[:]
    for ui, oi in zip(inv[:total].tolist(), owners.tolist()):
        collected[ui] |= gbits[oi]
    locx = np.searchsorted(ranks_np, us)
    np.minimum(locx, k - 1, out=locx)
    outside = (ranks_np[locx] != us).tolist()
    for s, out in zip(collected, outside):
        if out:
            counters[s] = cget(s, 0) + 1


def trace_frequencies(index: TraceIndex, xs) -> TraceMultiset:
    """The multiset of traces of X: for every subset T of X, how many
    vertices outside X see exactly T. ``xs`` is an iterable of vertex ids
    or a prepared :class:`QuerySet`."""
    q = _as_query(index, xs)
    n = index.og.graph.n
    if not q.members:
        return TraceMultiset((), {0: n})
    counters = {0: n}
    zero_adjust = 0

    # Right sweep over the stored keys of every member.
    ptr, keys, counts = index._ptr_list, index._keys_list, index._counts_list
    rptr, rranks = index.tr2.row_ptr_list, index.tr2.row_ranks_list
    bbr = q.bit_by_rank
    cget = counters.get
    for r, mask, own, xbit in zip(q.ranks, q.masks, q.own_local, q.global_bits):
        solo = 0
        base = rptr[r]
        for t in range(ptr[r], ptr[r + 1]):
            rest = keys[t] & mask
            c = counts[t]
            if rest == own:  # the key meets X in x alone, by far the common case
                solo += c
                continue
            s = 0
            while rest:
                low = rest & -rest
                s |= bbr[rranks[base + low.bit_length() - 1]]
                rest ^= low
            counters[s] = cget(s, 0) + c
            s ^= xbit  # the member's own bit is always present
            counters[s] = cget(s, 0) - c
        if solo:
            counters[xbit] = cget(xbit, 0) + solo
            zero_adjust -= solo
    counters[0] += zero_adjust

    # Left sweep over the closed left neighbourhood of X.
    if len(q.members) >= _VECTOR_MIN:
        _left_sweep_vector(index, q, counters)
    else:
        _left_sweep_python(index, q, counters)

    final = {0: counters.get(0, 0)}
    for s, c in counters.items():
        assert c >= 0, "negative trace multiplicity; index and query disagree"
        if c and s:
            final[s] = c
    assert final[0] >= 0, "negative empty-trace multiplicity"
    return TraceMultiset(q.members, final)


def trace_list(index: TraceIndex, xs) -> set[frozenset[int]]:
    """The set of traces of X with multiplicity at least one."""
    return trace_frequencies(index, xs).support()


def neighbourhood_count(index: TraceIndex, xs) -> tuple[int, int]:
    """(|N[X]|, |N(X) minus X|) for the query set X.

    Every vertex with a left X-neighbour is counted once via the index keys
    whose intersection with X is exactly one member; vertices of the closed
    left neighbourhood of X without any left X-neighbour account for the
    rest. The printed form of this correction that only visits members of X
    double-counts outside vertices having both a left and a right
    X-neighbour, so the complement form over the whole closed left
    neighbourhood is used instead.
    """
    q = _as_query(index, xs)
    ptr, keys, counts = index._ptr_list, index._keys_list, index._counts_list
    closed = 0
    for i, r in enumerate(q.ranks):
        mask = q.masks[i]
        own = q.own_local[i]
        for t in range(ptr[r], ptr[r + 1]):
            if keys[t] & mask == own:
                closed += counts[t]

    lptr, lidx = index.og._lptr_list, index.og._lidx_list
    rank_set = q.rank_set
    left_closed = set(q.ranks)
    for r in q.ranks:
        left_closed.update(lidx[lptr[r] : lptr[r + 1]])
    for u in left_closed:
        for w in lidx[lptr[u] : lptr[u + 1]]:
            if w in rank_set:
                break
        else:
            closed += 1
    return closed, closed - len(q)
