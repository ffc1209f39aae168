"""Edge-list parsing and ordering-file serialization.

The edge-list format is the plain whitespace format common to public network
corpora: one edge per line, first two tokens are the endpoints, anything after
them (weights, timestamps) is ignored, and lines starting with ``#`` or ``%``
are comments. An ordering file holds one vertex token per line; earlier line
means smaller in the order.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, OrderedGraph, from_edges, orient


class FormatError(ValueError):
    """Raised for malformed graph or ordering input."""


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse edge-list text into a Graph.

    Accepts a string or an iterable of lines. Vertex ids are assigned in
    first-appearance order of the tokens. A non-comment line with exactly one
    token is rejected with its line number.
    """
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    pairs: list[tuple[str, str]] = []
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise FormatError(f"line {ln}: expected two vertex tokens, got {tokens[0]!r}")
        pairs.append((tokens[0], tokens[1]))
    return from_edges(pairs)


def load_graph(path) -> Graph:
    """Read and parse an edge-list file; bytes must decode as UTF-8."""
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not valid UTF-8 ({exc})") from None
    return parse_edge_list(text)


def write_ordering(og: OrderedGraph) -> str:
    """Serialize an ordering as one vertex token per line, smallest first."""
    labels = og.graph.labels
    return "".join(f"{labels[v]}\n" for v in og.order)


def read_ordering(g: Graph, text: str | Iterable[str]) -> OrderedGraph:
    """Parse an ordering file for ``g``; must cover every vertex exactly once.

    Tokens are matched against the string form of the graph's labels, so
    orderings written by :func:`write_ordering` round-trip regardless of the
    original label type.
    """
    id_by_token = {str(lab): i for i, lab in enumerate(g.labels)}
    if len(id_by_token) != g.n:
        raise FormatError("graph labels are not distinct as strings; cannot match an ordering file")
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    order: list[int] = []
    seen = set()
    for ln, raw in enumerate(lines, start=1):
        token = raw.strip()
        if not token:
            continue
        v = id_by_token.get(token)
        if v is None:
            raise FormatError(f"line {ln}: unknown vertex token {token!r}")
        if v in seen:
            raise FormatError(f"line {ln}: duplicate vertex token {token!r}")
        seen.add(v)
        order.append(v)
    if len(order) != g.n:
        raise FormatError(f"ordering covers {len(order)} of {g.n} vertices")
    return orient(g, order)
