"""Signed graph data model and signed-degree bookkeeping."""

from __future__ import annotations

from collections import deque
from enum import IntEnum
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


class Sign(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __neg__(self) -> Sign:
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"


Edge = tuple[int, int]


def _as_sign(value: int) -> Sign:
    if isinstance(value, bool) or value not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {value!r}")
    return Sign(value)


def _edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SignedGraph:
    """Simple undirected graph whose edges carry a :class:`Sign`.

    Vertices are the integers ``0 .. order-1``. Instances are immutable;
    use :class:`GraphBuilder` (or :meth:`from_edges`) to make one.
    """

    __slots__ = ("_order", "_edges", "_degrees")

    def __init__(self, order: int, edges: Mapping[Edge, Sign] | None = None):
        if isinstance(order, bool) or not isinstance(order, int) or order < 0:
            raise DomainError(f"order must be a non-negative integer, got {order!r}")
        checked: dict[Edge, Sign] = {}
        for (u, v), sign in (edges or {}).items():
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"edge ({u}, {v}) out of range for order {order}")
            key = _edge_key(u, v)
            if key in checked:
                raise DomainError(f"duplicate edge {key}")
            checked[key] = _as_sign(sign)
        self._order = order
        self._edges = MappingProxyType(dict(sorted(checked.items())))
        degrees = [0] * order
        for (u, v), sign in self._edges.items():
            degrees[u] += sign
            degrees[v] += sign
        self._degrees = tuple(degrees)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
        builder = GraphBuilder(order)
        for u, v, sign in edges:
            builder.add_edge(u, v, sign)
        return builder.build()

    @classmethod
    def complete(cls, order: int, sign: int = Sign.POSITIVE) -> SignedGraph:
        sign = _as_sign(sign)
        return cls(order, {(u, v): sign for u in range(order) for v in range(u + 1, order)})

    @classmethod
    def empty(cls, order: int) -> SignedGraph:
        return cls(order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> Mapping[Edge, Sign]:
        """Edge map keyed by ``(u, v)`` with ``u < v``, in sorted order."""
        return self._edges

    def __len__(self) -> int:
        return self._order

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        return _edge_key(*pair) in self._edges

    def sign(self, u: int, v: int) -> Sign | None:
        return self._edges.get(_edge_key(u, v))

    def neighbors(self, v: int) -> Iterator[int]:
        for a, b in self._edges:
            if a == v:
                yield b
            elif b == v:
                yield a

    def degrees(self) -> tuple[int, ...]:
        """Signed degree of every vertex, indexed by vertex."""
        return self._degrees

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._order == other._order and dict(self._edges) == dict(other._edges)

    def __hash__(self) -> int:
        return hash((self._order, tuple(self._edges.items())))

    def __repr__(self) -> str:
        pos = sum(1 for s in self._edges.values() if s is Sign.POSITIVE)
        return f"SignedGraph(order={self._order}, positive={pos}, negative={len(self._edges) - pos})"


class GraphBuilder:
    """Accumulates edges for a :class:`SignedGraph`; rejects loops and duplicates."""

    def __init__(self, order: int = 0):
        self.order = order
        self._edges: dict[Edge, Sign] = {}

    def add_vertices(self, count: int) -> range:
        start = self.order
        self.order += count
        return range(start, self.order)

    def add_edge(self, u: int, v: int, sign: int = Sign.POSITIVE) -> None:
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        if not (0 <= u < self.order and 0 <= v < self.order):
            raise DomainError(f"edge ({u}, {v}) out of range for order {self.order}")
        key = _edge_key(u, v)
        if key in self._edges:
            raise DomainError(f"duplicate edge {key}")
        self._edges[key] = _as_sign(sign)

    def add_graph(self, g: SignedGraph) -> range:
        """Append a copy of ``g`` on fresh vertices; return the new index range."""
        block = self.add_vertices(g.order)
        for (u, v), sign in g.edges.items():
            self._edges[(u + block.start, v + block.start)] = sign
        return block

    def join(self, left: Iterable[int], right: Iterable[int], sign: int = Sign.POSITIVE) -> None:
        right = list(right)
        for u in left:
            for v in right:
                self.add_edge(u, v, sign)

    def build(self) -> SignedGraph:
        return SignedGraph(self.order, self._edges)


class DegreeSet(frozenset):
    """Non-empty set of distinct integers.

    Built from any iterable; repeated values are rejected rather than
    silently collapsed.
    """

    def __new__(cls, values: Iterable[int] = ()):
        values = list(values)
        if not values:
            raise DomainError("degree set must be non-empty")
        for d in values:
            if isinstance(d, bool) or not isinstance(d, int):
                raise DomainError(f"degree set entries must be integers, got {d!r}")
        if len(set(values)) != len(values):
            raise DomainError(f"degree set has repeated values: {sorted(values)}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return "DegreeSet({" + ", ".join(map(str, sorted(self))) + "})"


def signed_degree(g: SignedGraph, v: int) -> int:
    if not 0 <= v < g.order:
        raise DomainError(f"vertex {v} out of range for order {g.order}")
    return g.degrees()[v]


def signed_degree_sequence(g: SignedGraph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def signed_degree_set(g: SignedGraph) -> DegreeSet:
    if g.order == 0:
        raise DomainError("degree set of a graph with no vertices is undefined")
    return DegreeSet(set(g.degrees()))


def negate_signs(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.order, {e: -s for e, s in g.edges.items()})


def is_connected(g: SignedGraph) -> bool:
    """Connectivity of the underlying unsigned graph."""
    if g.order == 0:
        raise DomainError("connectivity of a graph with no vertices is undefined")
    adj: list[list[int]] = [[] for _ in range(g.order)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.order


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    builder = GraphBuilder()
    for g in graphs:
        builder.add_graph(g)
    return builder.build()


def sorted_sequence(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(values, reverse=True))
