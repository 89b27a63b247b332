"""JSON and DOT serialization of signed graphs."""

from __future__ import annotations

import json

from .graph import DomainError, Sign, SignedGraph


class GraphParseError(ValueError):
    pass


def to_json(g: SignedGraph) -> str:
    """Canonical one-line document: ``{"order":n,"edges":[[u,v,sign],...]}``."""
    doc = {"order": g.order, "edges": [[u, v, int(s)] for (u, v), s in g.edges.items()]}
    return json.dumps(doc, separators=(",", ":"))


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_json(text: str) -> SignedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"order", "edges"}:
        raise GraphParseError('document must be an object with exactly the keys "order" and "edges"')
    order, edges = doc["order"], doc["edges"]
    if not _is_int(order) or order < 0:
        raise GraphParseError(f"order must be a non-negative integer, got {order!r}")
    if not isinstance(edges, list):
        raise GraphParseError("edges must be a list")
    seen: dict[tuple[int, int], Sign] = {}
    for edge in edges:
        if not (isinstance(edge, list) and len(edge) == 3 and all(map(_is_int, edge))):
            raise GraphParseError(f"edge {edge!r}: expected [u, v, sign] with integer entries")
        u, v, sign = edge
        if u == v:
            raise GraphParseError(f"edge {edge!r}: loop at vertex {u}")
        if u > v:
            raise GraphParseError(f"edge {edge!r}: endpoints must satisfy u < v")
        if u < 0 or v >= order:
            raise GraphParseError(f"edge {edge!r}: vertex index out of range for order {order}")
        if sign not in (1, -1):
            raise GraphParseError(f"edge {edge!r}: sign must be 1 or -1")
        if (u, v) in seen:
            raise GraphParseError(f"edge {edge!r}: duplicate pair ({u}, {v})")
        seen[(u, v)] = Sign(sign)
    try:
        return SignedGraph(order, seen)
    except DomainError as exc:  # pragma: no cover - all cases checked above
        raise GraphParseError(str(exc)) from None


def to_dot(g: SignedGraph, name: str = "G") -> str:
    """Undirected DOT; positive edges solid with label "+", negative dashed with "-"."""
    lines = [f"graph {name} {{"]
    lines += [f"  v{v};" for v in range(g.order)]
    for (u, v), s in g.edges.items():
        style = "solid" if s is Sign.POSITIVE else "dashed"
        lines.append(f'  v{u} -- v{v} [style={style}, label="{s.symbol}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
