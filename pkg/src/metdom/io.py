"""Edge-list and JSON graph files.

Edge list::

    # comment lines start with '#'
    n m
    u v        (m lines, 0-based vertex indices)

JSON: ``{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphError, GraphFormatError
from .graph import Graph


def _ints(line, lineno, count):
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p, 10) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not a decimal integer: {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing 'n m' header")
    n, m = _ints(lines[0][1], lines[0][0], 2)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = [tuple(_ints(ln, i, 2)) for i, ln in body]
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(G: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"{G.n} {G.m}")
    out += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(out) + "\n"


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("n"), int) or not isinstance(data.get("edges"), list):
        raise GraphFormatError("JSON graph needs an integer 'n' and an 'edges' array")
    edges = data["edges"]
    if not all(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges):
        raise GraphFormatError("each edge must be a 2-element integer array")
    try:
        return Graph(data["n"], edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def format_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]})


def read_graph(path) -> Graph:
    """Load a graph file, choosing JSON when the content starts with '{'."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edge_list(text)


def write_graph(G: Graph, path, comment: str | None = None) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(format_json(G) + "\n")
    else:
        path.write_text(format_edge_list(G, comment))
