from __future__ import annotations

import random

import pytest

from tracequery import from_edges, orient
from tracequery.generate import gnp


def test_empty_input_gives_empty_graph():
    g = from_edges([])
    assert g.n == 0
    assert g.m == 0
    assert list(g.edges()) == []


def test_duplicate_orientations_and_self_loops_collapse():
    g = from_edges([("a", "b"), ("b", "a"), ("a", "a")])
    assert g.n == 2
    assert g.m == 1
    assert g.neighbours(0) == [1]
    assert g.neighbours(1) == [0]


def test_ids_assigned_in_first_appearance_order():
    g = from_edges([("x", "y"), ("z", "x")])
    assert g.labels == ("x", "y", "z")
    assert g.id_of("z") == 2
    assert g.label(1) == "y"


def test_unknown_token_rejected():
    g = from_edges([("a", "b")])
    with pytest.raises(ValueError, match="unknown vertex token"):
        g.id_of("c")


def test_isolated_vertices_via_vertices_argument():
    g = from_edges([(1, 2)], vertices=[0, 1, 2, 3])
    assert g.n == 4
    assert g.m == 1
    assert g.degree(0) == 0
    assert g.degree(3) == 0
    # pre-registered tokens claim the first ids
    assert g.labels == (0, 1, 2, 3)


def test_cycle_adjacency_is_sorted():
    g = from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.m == 4
    assert g.neighbours(0) == [1, 3]
    assert g.neighbours(3) == [0, 2]
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_orient_left_right_split_on_cycle():
    g = from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
    og = orient(g, [0, 1, 2, 3])
    assert [og.left_neighbours(u) for u in range(4)] == [[], [0], [1], [0, 2]]
    assert [og.right_neighbours(u) for u in range(4)] == [[1, 3], [2], [3], []]
    assert og.max_left_degree == 2
    assert [og.left_degree(u) for u in range(4)] == [0, 1, 1, 2]


def test_orient_path_and_complete_left_degrees():
    p5 = from_edges([(i, i + 1) for i in range(4)])
    assert orient(p5, range(5)).max_left_degree == 1
    k4 = from_edges([(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert orient(k4, range(4)).max_left_degree == 3


def test_orient_rank_and_order_are_inverse():
    g = from_edges([(0, 1), (1, 2)])
    og = orient(g, [2, 0, 1])
    assert og.order == [2, 0, 1]
    assert og.rank == [1, 2, 0]
    assert [og.vertex_at(og.rank_of(v)) for v in range(3)] == [0, 1, 2]


def test_orient_rejects_non_permutations():
    g = from_edges([(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        orient(g, [0, 1])  # wrong length
    with pytest.raises(ValueError):
        orient(g, [0, 1, 1])  # duplicate
    with pytest.raises(ValueError):
        orient(g, [0, 1, 3])  # out of range


def test_orient_empty_graph():
    og = orient(from_edges([]), [])
    assert og.max_left_degree == 0
    assert og.order == []


def test_orient_partitions_adjacency_on_random_graphs():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 30)
        g = gnp(n, rng.choice([0.1, 0.3, 0.6]), rng.randrange(1 << 30))
        perm = list(range(n))
        rng.shuffle(perm)
        og = orient(g, perm)
        for u in range(n):
            left = og.left_neighbours(u)
            right = og.right_neighbours(u)
            assert sorted(left + right) == g.neighbours(u)
            assert all(og.rank[w] < og.rank[u] for w in left)
            assert all(og.rank[w] > og.rank[u] for w in right)
            # both sides come back ascending by rank
            assert [og.rank[w] for w in left] == sorted(og.rank[w] for w in left)
            assert [og.rank[w] for w in right] == sorted(og.rank[w] for w in right)
