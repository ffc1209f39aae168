"""Synthetic graphs for tests and benchmarks.

Everything here is deterministic given its arguments; random constructions
take an explicit seed.
"""

from __future__ import annotations

import random

from .graph import Graph, from_edges


def path(n: int) -> Graph:
    return from_edges(((i, i + 1) for i in range(n - 1)), vertices=range(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges((i, (i + 1) % n) for i in range(n))


def complete(n: int) -> Graph:
    return from_edges(((i, j) for i in range(n) for j in range(i + 1, n)), vertices=range(n))


def star(leaves: int) -> Graph:
    """Center is vertex 0, leaves are 1..leaves."""
    return from_edges(((0, i) for i in range(1, leaves + 1)), vertices=range(leaves + 1))


def empty(n: int) -> Graph:
    return from_edges((), vertices=range(n))


def grid(rows: int, cols: int) -> Graph:
    """Rows x cols grid; vertex ids are row-major."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edges(edges, vertices=range(rows * cols))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with each pair drawn independently."""
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(edges, vertices=range(n))


def grid_with_matchings(rows: int, cols: int, matchings: int, seed: int) -> Graph:
    """A grid plus ``matchings`` random perfect matchings over its vertices.

    Keeps the grid's small strongly-2-reachable sets while adding long-range
    edges, which is the shape the benchmark wants: large, sparse, non-trivial.
    """
    n = rows * cols
    rng = random.Random(seed)
    edges = list(grid(rows, cols).edges())
    ids = list(range(n))
    for _ in range(matchings):
        rng.shuffle(ids)
        edges.extend((ids[i], ids[i + 1]) for i in range(0, n - 1, 2))
    return from_edges(edges, vertices=range(n))
