"""Text formats: edge-list graphs, relation-list orders, representation dumps.

Graph files start with a line holding the vertex count, followed by one
``u v`` edge per line.  Order files are the same with ``u < v`` relation
lines; the transitive closure is taken on load.  Lines starting with ``#``
and blank lines are ignored.  Vertices are 0-based integers everywhere.
"""
from __future__ import annotations

import json
import sys
from typing import Iterator

from .errors import DuplicateEdge, ParseError, SelfLoop
from .graphs import Graph
from .orders import PartialOrder, make_partial_order
from .triangles import TriangleRepresentation

__all__ = [
    "parse_graph",
    "parse_order",
    "load_graph",
    "load_order",
    "graph_to_text",
    "order_to_text",
    "emit_representation",
    "parse_representation",
]


def _significant_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _read_count(lines, what: str) -> tuple[int, object]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f"empty {what} file") from None
    try:
        n = int(line)
    except ValueError:
        raise ParseError(f"expected {what} size, got {line!r}", lineno) from None
    if n < 0:
        raise ParseError(f"{what} size must be nonnegative", lineno)
    return n, lines


def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a validated :class:`Graph`."""
    n, lines = _read_count(_significant_lines(text), "graph")
    edges: set[tuple[int, int]] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in {line!r}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise DuplicateEdge(f"duplicate edge {edge[0]} {edge[1]}", lineno)
        edges.add(edge)
    return Graph(n, frozenset(edges))


def parse_order(text: str) -> PartialOrder:
    """Parse relation-list text and return its transitive closure.

    Raises :class:`simpletri.errors.CycleError` when the closure is cyclic.
    """
    n, lines = _read_count(_significant_lines(text), "order")
    relations = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise ParseError(f"expected 'u < v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer element in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"element out of range in {line!r}", lineno)
        relations.append((u, v))
    return make_partial_order(n, relations)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def load_graph(path: str) -> Graph:
    """Read a graph file; '-' reads standard input."""
    return parse_graph(_read_source(path))


def load_order(path: str) -> PartialOrder:
    """Read an order file; '-' reads standard input."""
    return parse_order(_read_source(path))


def graph_to_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def order_to_text(p: PartialOrder) -> str:
    lines = [str(p.n)]
    lines.extend(f"{u} < {v}" for u, v in sorted(p.pairs))
    return "\n".join(lines) + "\n"


def emit_representation(t: TriangleRepresentation, format: str = "structured") -> str:
    """Serialize a representation; ``structured`` is versioned JSON, ``svg``
    draws the two lines with one translucent triangle per vertex."""
    if format == "structured":
        doc = {
            "version": 1,
            "triangles": [
                {"v": v, "apex": t.apex[v], "base": [t.base[v][0], t.base[v][1]]}
                for v in range(t.n)
            ],
        }
        return json.dumps(doc, separators=(",", ":"))
    if format == "svg":
        return _to_svg(t)
    raise ValueError(f"unknown format {format!r}")


def parse_representation(text: str) -> TriangleRepresentation:
    """Inverse of the structured format of :func:`emit_representation`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != 1:
        raise ParseError("expected a version-1 representation document")
    triangles = doc.get("triangles")
    if not isinstance(triangles, list):
        raise ParseError("missing triangle list")
    apex = []
    base = []
    for i, entry in enumerate(triangles):
        if entry.get("v") != i:
            raise ParseError(f"triangle entries must be ascending, got {entry!r}")
        apex.append(entry["apex"])
        lo, hi = entry["base"]
        base.append((lo, hi))
    return TriangleRepresentation(tuple(apex), tuple(base))


def _to_svg(t: TriangleRepresentation, scale: int = 40, height: int = 160) -> str:
    margin = scale
    coords = [1]
    for v in range(t.n):
        coords.extend((t.apex[v], t.base[v][0], t.base[v][1]))
    width = margin * 2 + scale * max(coords)
    top, bottom = margin, margin + height
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{bottom + margin}" viewBox="0 0 {width} {bottom + margin}">',
        f'<line x1="0" y1="{top}" x2="{width}" y2="{top}" stroke="black"/>',
        f'<line x1="0" y1="{bottom}" x2="{width}" y2="{bottom}" stroke="black"/>',
    ]
    for v in range(t.n):
        ax = margin + scale * (t.apex[v] - 1)
        lx = margin + scale * (t.base[v][0] - 1)
        rx = margin + scale * (t.base[v][1] - 1)
        hue = (v * 360) // max(t.n, 1)
        parts.append(
            f'<polygon points="{ax},{top} {lx},{bottom} {rx},{bottom}" '
            f'fill="hsl({hue},70%,50%)" fill-opacity="0.45" stroke="black"/>'
        )
        parts.append(
            f'<text x="{ax}" y="{top - 6}" text-anchor="middle" '
            f'font-size="14">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
