"""Connected signed graphs with a prescribed signed degree set.

Vertex layout is deterministic: in every construction the ingredient
graphs are laid out in the order they are named (first ingredient at
offset 0, the next one right after it, and so on), and any newly added
vertices come last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    DegreeSet,
    DomainError,
    GraphBuilder,
    Sign,
    SignedGraph,
    disjoint_union,
    negate_signs,
)


@dataclass(frozen=True)
class RealizationResult:
    """A realization of a degree set.

    ``claimed_minimum_order`` is only set where the order is provably
    minimal (sets of a single sign, and ``{0}``). ``case`` names the
    construction used; ``added`` lists the vertices created by gluing.
    """

    graph: SignedGraph
    claimed_minimum_order: int | None = None
    case: str = ""
    added: tuple[int, ...] = field(default=())


def _as_set(values: Iterable[int]) -> DegreeSet:
    return values if isinstance(values, DegreeSet) else DegreeSet(values)


def _positive_graph(degrees: list[int]) -> SignedGraph:
    # degrees: strictly increasing positive integers
    b = GraphBuilder()
    if len(degrees) == 1:
        return SignedGraph.complete(degrees[0] + 1)
    low, high = degrees[0], degrees[-1]
    if len(degrees) == 2:
        clique = b.add_graph(SignedGraph.complete(low))
        independent = b.add_vertices(high - low + 1)
        b.join(clique, independent)
        return b.build()
    inner = b.add_graph(_positive_graph([d - low for d in degrees[1:-1]]))
    clique = b.add_graph(SignedGraph.complete(low))
    independent = b.add_vertices(high - degrees[-2])
    b.join(clique, inner)
    b.join(clique, independent)
    return b.build()


def realize_positive_set(values: Iterable[int]) -> RealizationResult:
    """All-positive connected graph on ``max(D) + 1`` vertices with degree set ``D``.

    Two extremes are consumed per level: the smallest degree ``d1`` by an
    all-positive clique on ``d1`` vertices, the largest ``dn`` by an
    independent block of ``dn - d(n-1)`` vertices. The clique is joined to
    everything else, and the remaining middle degrees, shifted down by
    ``d1``, are realized recursively.
    """
    D = _as_set(values)
    if min(D) <= 0:
        raise DomainError(f"expected positive integers, got {sorted(D)}")
    g = _positive_graph(sorted(D))
    return RealizationResult(g, claimed_minimum_order=max(D) + 1, case="positive")


def realize_negative_set(values: Iterable[int]) -> RealizationResult:
    """Sign-interchanged positive realization of ``{-d : d in D}``."""
    D = _as_set(values)
    if max(D) >= 0:
        raise DomainError(f"expected negative integers, got {sorted(D)}")
    g = negate_signs(realize_positive_set(-d for d in D).graph)
    return RealizationResult(g, claimed_minimum_order=-min(D) + 1, case="negative")


def _first_edge(g: SignedGraph, sign: Sign) -> tuple[int, int]:
    for e, s in g.edges.items():
        if s is sign:
            return e
    raise AssertionError(f"ingredient graph has no {sign.name.lower()} edge")


def realize_set(values: Iterable[int]) -> RealizationResult:
    """Connected signed graph whose signed degree set is exactly ``D``.

    Mixed sets are assembled from the single-sign realizations. Each
    gluing step adds four edges around a 4-cycle with alternating signs,
    so every touched vertex gains one positive and one negative edge and
    keeps its degree, while fresh vertices end up at degree 0.
    """
    D = _as_set(values)
    positive = sorted(d for d in D if d > 0)
    negative = sorted(d for d in D if d < 0)
    has_zero = 0 in D

    if not positive and not negative:
        return RealizationResult(SignedGraph.empty(1), claimed_minimum_order=1, case="II")
    if not has_zero and not negative:
        return RealizationResult(realize_positive_set(positive).graph, max(D) + 1, "I")
    if not has_zero and not positive:
        return RealizationResult(realize_negative_set(negative).graph, -min(D) + 1, "I")

    b = GraphBuilder()
    if has_zero and not (positive and negative):
        if positive:
            g1, sign = realize_positive_set(positive).graph, Sign.POSITIVE
        else:
            g1, sign = realize_negative_set(negative).graph, Sign.NEGATIVE
        b.add_graph(g1)
        x, y = b.add_vertices(2)
        u, v = _first_edge(g1, sign)
        b.add_edge(u, x, sign)
        b.add_edge(v, y, sign)
        b.add_edge(u, y, -sign)
        b.add_edge(v, x, -sign)
        return RealizationResult(b.build(), case="III", added=(x, y))

    g1 = realize_positive_set(positive).graph
    g2 = realize_negative_set(negative).graph
    b.add_graph(g1)
    block2 = b.add_graph(g2)
    u, v = _first_edge(g1, Sign.POSITIVE)
    if has_zero:
        (y,) = b.add_vertices(1)
        x = block2.start
        b.add_edge(u, y, Sign.POSITIVE)
        b.add_edge(v, x, Sign.POSITIVE)
        b.add_edge(u, x, Sign.NEGATIVE)
        b.add_edge(v, y, Sign.NEGATIVE)
        return RealizationResult(b.build(), case="V", added=(y,))

    x, y = (w + block2.start for w in _first_edge(g2, Sign.NEGATIVE))
    b.add_edge(u, x, Sign.POSITIVE)
    b.add_edge(v, y, Sign.POSITIVE)
    b.add_edge(u, y, Sign.NEGATIVE)
    b.add_edge(v, x, Sign.NEGATIVE)
    return RealizationResult(b.build(), case="IV")


def replicate(g: SignedGraph, k: int) -> SignedGraph:
    """Disjoint union of ``k`` copies of ``g``; disconnected whenever ``k >= 2``."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if g.order < 1:
        raise DomainError("cannot replicate a graph with no vertices")
    return disjoint_union(*([g] * k))
