from __future__ import annotations

import pytest

from tracequery import from_edges


@pytest.fixture
def worked_example():
    """Nine-outside-vertices example: query targets b, c, d; outside vertices
    1..8 of which 1 and 8 see none of the targets. Expected trace
    multiplicities, keyed by target subsets:
    {b,c}: 2, {b}: 1, {c}: 1, {c,d}: 1, {d}: 1, empty: 2.
    """
    edges = [
        ("2", "b"),
        ("2", "c"),
        ("3", "b"),
        ("4", "b"),
        ("4", "c"),
        ("5", "c"),
        ("6", "c"),
        ("6", "d"),
        ("7", "d"),
    ]
    vertices = ["b", "c", "d"] + [str(i) for i in range(1, 9)]
    g = from_edges(edges, vertices=vertices)
    targets = [g.id_of("b"), g.id_of("c"), g.id_of("d")]
    return g, targets
