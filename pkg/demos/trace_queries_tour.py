"""Tour of the core query workflow: build an index once, query it many times.

Walks a small hand-made graph end to end: load edges from text, pick an
ordering, build the trace index, then answer frequency, listing, and
neighbourhood-count queries, cross-checking each against the brute-force
baseline.
"""

from tracequery import (
    QuerySet,
    best_ordering,
    build_index,
    naive_neighbourhood_count,
    naive_trace_frequencies,
    neighbourhood_count,
    parse_edge_list,
    trace_frequencies,
    trace_list,
)

EDGES = """
# three hubs b, c, d with overlapping follower sets
2 b
2 c
3 b
4 b
4 c
5 c
6 c
6 d
7 d
"""


def show(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    g = parse_edge_list(EDGES)
    print(f"graph: {g.n} vertices, {g.m} edges")

    og, tr2, stats = best_ordering(g)
    idx = build_index(og, tr2)
    show(f"index built with the {stats.strategy} ordering (d={stats.d}, s2={stats.s2})")
    mem = idx.memory_stats()
    print(f"stored keys: {mem['total_keys']} (per-vertex bound {mem['key_bound']})")

    targets = [g.id_of("b"), g.id_of("c"), g.id_of("d")]
    label = lambda v: g.labels[v]

    show("trace frequencies for X = {b, c, d}")
    freq = trace_frequencies(idx, targets)
    for trace, count in freq.items():
        names = "{" + ", ".join(label(v) for v in trace) + "}"
        print(f"  {names:12} seen by {count} outside vertices")
    print(f"  total outside vertices: {freq.total()} = {g.n} - {len(targets)}")

    show("distinct traces")
    for trace in sorted(trace_list(idx, targets), key=lambda t: (len(t), sorted(map(label, t)))):
        print("  {" + ", ".join(sorted(label(v) for v in trace)) + "}")

    show("neighbourhood sizes")
    closed, open_ = neighbourhood_count(idx, targets)
    print(f"  |N[X]| = {closed}, |N(X) \\ X| = {open_}")

    show("cross-check against the naive baseline")
    assert freq == naive_trace_frequencies(g, targets)
    assert (closed, open_) == naive_neighbourhood_count(g, targets)
    print("  indexed and baseline answers agree")

    # A prepared QuerySet skips revalidation when the same X is queried twice.
    q = QuerySet(idx, targets)
    assert trace_frequencies(idx, q) == freq
    assert neighbourhood_count(idx, q) == (closed, open_)
    print("  prepared QuerySet reuse works")


if __name__ == "__main__":
    main()
