"""Recursive-descent checker for the Graphviz DOT language.

Covers the full abstract grammar (strict/graph/digraph, node, edge and
attribute statements, ``ID = ID``, subgraphs, ports, the four kinds of
ID, comments). It only validates and collects node and edge names; it
does not interpret attributes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class DotSyntaxError(ValueError):
    pass


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*|/\*.*?\*/|^\#[^\n]*)
  | (?P<edgeop>--|->)
  | (?P<punct>[{}\[\];,=:])
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<html><)
  | (?P<numeral>-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))
  | (?P<name>[A-Za-z_\x80-\uffff][A-Za-z_0-9\x80-\uffff]*)
    """,
    re.VERBOSE | re.DOTALL | re.MULTILINE,
)
_KEYWORDS = {"strict", "graph", "digraph", "node", "edge", "subgraph"}
_COMPASS = {"n", "ne", "e", "se", "s", "sw", "w", "nw", "c", "_"}


def _html_end(text: str, pos: int) -> int:
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == "<":
            depth += 1
        elif text[i] == ">":
            depth -= 1
            if depth == 0:
                return i + 1
    raise DotSyntaxError(f"unterminated HTML string at offset {pos}")


def tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DotSyntaxError(f"unexpected character {text[pos]!r} at offset {pos}")
        kind = m.lastgroup
        if kind == "html":
            end = _html_end(text, pos)
            tokens.append(("id", text[pos:end]))
            pos = end
            continue
        value = m.group()
        pos = m.end()
        if kind == "ws":
            continue
        if kind == "name" and value.lower() in _KEYWORDS:
            tokens.append((value.lower(), value))
        elif kind in ("string", "numeral", "name"):
            tokens.append(("id", value))
        else:
            tokens.append((value, value))
    return tokens


@dataclass
class DotGraph:
    kind: str
    name: str | None
    nodes: set[str] = field(default_factory=set)
    edges: list[tuple[str, str]] = field(default_factory=list)


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0
        self.collecting: list[list[str]] = []

    def peek(self, offset: int = 0) -> str | None:
        i = self.pos + offset
        return self.tokens[i][0] if i < len(self.tokens) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            got = self.tokens[self.pos][1] if self.pos < len(self.tokens) else "end of input"
            raise DotSyntaxError(f"expected {kind!r}, got {got!r}")
        self.pos += 1
        return self.tokens[self.pos - 1][1]

    def accept(self, kind: str) -> bool:
        if self.peek() == kind:
            self.pos += 1
            return True
        return False

    def graph(self) -> DotGraph:
        self.accept("strict")
        if self.peek() not in ("graph", "digraph"):
            raise DotSyntaxError("expected 'graph' or 'digraph'")
        kind = self.take(self.peek()).lower()
        name = self.take("id") if self.peek() == "id" else None
        self.out = DotGraph(kind, name)
        self.edgeop = "--" if kind == "graph" else "->"
        self.take("{")
        self.stmt_list()
        self.take("}")
        if self.pos != len(self.tokens):
            raise DotSyntaxError("trailing input after graph")
        return self.out

    def stmt_list(self) -> None:
        while self.peek() not in ("}", None):
            self.stmt()
            self.accept(";")

    def stmt(self) -> None:
        kind = self.peek()
        if kind in ("graph", "node", "edge"):
            self.pos += 1
            self.attr_list(required=True)
        elif kind == "id" and self.peek(1) == "=":
            self.pos += 2
            self.take("id")
        elif kind in ("id", "subgraph", "{"):
            left = self.operand()
            if self.peek() in ("--", "->"):
                while self.peek() in ("--", "->"):
                    if self.take(self.peek()) != self.edgeop:
                        raise DotSyntaxError(f"edge operator must be {self.edgeop!r} in a {self.out.kind}")
                    right = self.operand()
                    self.out.edges.extend((a, b) for a in left for b in right)
                    left = right
            self.attr_list(required=False)
        else:
            raise DotSyntaxError(f"unexpected token {self.tokens[self.pos][1]!r}")

    def operand(self) -> list[str]:
        if self.peek() in ("subgraph", "{"):
            self.collecting.append([])
            self.subgraph()
            return self.collecting.pop()
        node = self.take("id")
        if self.accept(":"):
            port = self.take("id")
            if self.accept(":") and self.take("id").strip('"') not in _COMPASS:
                raise DotSyntaxError(f"bad compass point after port {port}")
        self.out.nodes.add(node)
        for members in self.collecting:
            members.append(node)
        return [node]

    def subgraph(self) -> None:
        if self.accept("subgraph") and self.peek() == "id":
            self.pos += 1
        self.take("{")
        self.stmt_list()
        self.take("}")

    def attr_list(self, required: bool) -> None:
        if required and self.peek() != "[":
            raise DotSyntaxError("expected '['")
        while self.accept("["):
            while self.peek() == "id":
                self.take("id")
                self.take("=")
                self.take("id")
                if self.peek() in (",", ";"):
                    self.pos += 1
            self.take("]")


def parse_dot(text: str) -> DotGraph:
    """Validate ``text`` as a single DOT graph; raise :class:`DotSyntaxError` if it is not."""
    return _Parser(tokenize(text)).graph()
