from __future__ import annotations

import random

import pytest

from tracequery import build_index, degeneracy_order, degree_order, orient, two_reach
from tracequery.generate import complete, cycle, empty, gnp, grid, path, star
from tracequery.index import _build_python, _build_vectorized

from reference import brute_index_contents


def decoded_entries(idx, n):
    return [{frozenset(idx.decode_key(x, k)): c for k, c in idx.entry(x)} for x in range(n)]


def build_on(g, order):
    og = orient(g, order)
    return build_index(og, two_reach(og))


def test_cycle_identity_contents():
    idx = build_on(cycle(4), range(4))
    assert decoded_entries(idx, 4) == [
        {frozenset({0}): 2},
        {frozenset({1}): 1},
        {frozenset({0, 2}): 1},
        {},
    ]


def test_path_identity_contents():
    idx = build_on(path(5), range(5))
    assert decoded_entries(idx, 5) == [
        {frozenset({0}): 1},
        {frozenset({1}): 1},
        {frozenset({2}): 1},
        {frozenset({3}): 1},
        {},
    ]


def test_edgeless_graph_has_empty_index():
    idx = build_on(empty(6), range(6))
    assert decoded_entries(idx, 6) == [{}] * 6
    stats = idx.memory_stats()
    assert stats["total_keys"] == 0
    assert stats["max_keys_per_vertex"] == 0


def test_memory_stats_on_examples():
    assert build_on(cycle(4), range(4)).memory_stats()["total_keys"] == 3
    assert build_on(path(5), range(5)).memory_stats()["max_keys_per_vertex"] == 1


def test_entry_rejects_unknown_vertex():
    idx = build_on(path(3), range(3))
    with pytest.raises(ValueError, match="unknown vertex"):
        idx.entry(3)
    with pytest.raises(ValueError, match="unknown vertex"):
        idx.entry(-1)


def test_build_rejects_foreign_two_reach():
    g = path(4)
    og_a = orient(g, range(4))
    og_b = orient(g, [3, 2, 1, 0])
    with pytest.raises(ValueError, match="different ordered graph"):
        build_index(og_a, two_reach(og_b))


def test_entry_iteration_sorted_with_positive_counts():
    g = gnp(30, 0.3, 60)
    idx = build_index(*_ordered(g, degeneracy_order))
    for x in range(g.n):
        pairs = idx.entry(x)
        keys = [k for k, _ in pairs]
        assert keys == sorted(keys)
        assert all(c >= 1 for _, c in pairs)


def _ordered(g, heuristic):
    og = heuristic(g)
    return og, two_reach(og)


def test_contents_match_brute_force_enumeration():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(1, 35)
        g = gnp(n, rng.choice([0.05, 0.15, 0.4]), rng.randrange(1 << 30))
        perm = list(range(n))
        rng.shuffle(perm)
        for og in (degeneracy_order(g), degree_order(g), orient(g, perm)):
            idx = build_index(og, two_reach(og))
            assert decoded_entries(idx, n) == brute_index_contents(og)


def test_counts_sum_to_edge_count_and_keys_end_at_owner():
    rng = random.Random(13)
    graphs = [cycle(6), star(5), grid(4, 7), complete(8)]
    graphs += [gnp(rng.randint(1, 40), 0.2, rng.randrange(1 << 30)) for _ in range(10)]
    for g in graphs:
        og = degeneracy_order(g)
        tr2 = two_reach(og)
        idx = build_index(og, tr2)
        total = 0
        for x in range(g.n):
            row_len = len(tr2.s2closed(x))
            for key, c in idx.entry(x):
                total += c
                # the owner occupies the last position of its row, so every
                # key's highest set bit is exactly that position
                assert key.bit_length() == row_len
                decoded = idx.decode_key(x, key)
                assert decoded[-1] == x
        assert total == g.m


def test_key_count_stays_under_structural_bound():
    rng = random.Random(29)
    for _ in range(20):
        g = gnp(rng.randint(2, 40), rng.choice([0.1, 0.3, 0.6]), rng.randrange(1 << 30))
        for heuristic in (degeneracy_order, degree_order):
            idx = build_index(*_ordered(g, heuristic))
            stats = idx.memory_stats()
            assert stats["max_keys_per_vertex"] <= stats["key_bound"]


def test_vectorized_and_python_builders_agree():
    rng = random.Random(37)
    for _ in range(25):
        n = rng.randint(1, 40)
        g = gnp(n, rng.choice([0.1, 0.3, 0.6]), rng.randrange(1 << 30))
        perm = list(range(n))
        rng.shuffle(perm)
        og = orient(g, perm)
        tr2 = two_reach(og)
        assert _build_vectorized(og, tr2) == _build_python(og, tr2)


def test_wide_rows_fall_back_and_stay_correct():
    # complete graph on 70 vertices: the last vertex's row has 70 members,
    # past the single-word fast path
    g = complete(70)
    og = orient(g, range(70))
    tr2 = two_reach(og)
    assert max(len(tr2.s2closed(u)) for u in range(70)) == 70
    idx = build_index(og, tr2)
    for x in range(70):
        # every later vertex is adjacent to all of 0..x, so the only key is
        # the full prefix, with one count per later vertex
        pairs = idx.entry(x)
        if x == 69:
            assert pairs == []
        else:
            assert len(pairs) == 1
            key, count = pairs[0]
            assert count == 69 - x
            assert idx.decode_key(x, key) == list(range(x + 1))
    assert idx.memory_stats()["total_keys"] == 69
