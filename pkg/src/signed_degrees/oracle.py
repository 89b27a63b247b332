"""Brute-force ground truth over all labeled signed graphs of a given order.

A graph on ``n`` vertices is identified with an integer in
``[0, 3**P)``, ``P = n(n-1)/2``: its base-3 digits, most significant
first, give the state of each vertex pair in lexicographic pair order
(0 = absent, 1 = positive, 2 = negative). Searches walk that index space
in contiguous chunks with numpy, so they can stop at the first witness
and report its index.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .graph import DegreeSet, SignedGraph

log = logging.getLogger(__name__)

CHUNK = 1 << 16
_DIGIT_SIGN = np.array([0, 1, -1], dtype=np.int8)


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the budget allows."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_order: int = 6
    max_graphs: int | None = None

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError(f"max_order must be >= 1, got {self.max_order}")

    def check(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"order must be non-negative, got {n}")
        if n > self.max_order:
            raise BudgetExceeded(f"order {n} exceeds budget max_order={self.max_order}")
        if self.max_graphs is not None and graph_count(n) > self.max_graphs:
            raise BudgetExceeded(
                f"order {n} needs {graph_count(n)} graphs, budget max_graphs={self.max_graphs}"
            )


DEFAULT_BUDGET = EnumerationBudget()


def pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_count(n: int) -> int:
    return 3 ** (n * (n - 1) // 2)


def graph_from_index(n: int, index: int) -> SignedGraph:
    ps = pairs(n)
    if not 0 <= index < graph_count(n):
        raise ValueError(f"index {index} out of range for order {n}")
    edges = {}
    for pair in reversed(ps):
        index, digit = divmod(index, 3)
        if digit:
            edges[pair] = int(_DIGIT_SIGN[digit])
    return SignedGraph(n, edges)


def index_of(g: SignedGraph) -> int:
    index = 0
    for pair in pairs(g.order):
        sign = g.sign(*pair)
        index = 3 * index + (0 if sign is None else 1 if sign > 0 else 2)
    return index


def enumerate_signed_graphs(n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[SignedGraph]:
    """Every labeled signed graph on ``n`` vertices, in index order."""
    budget.check(n)
    for index in range(graph_count(n)):
        yield graph_from_index(n, index)


@lru_cache(maxsize=8)
def _sign_block(n: int, start: int, stop: int) -> np.ndarray:
    """Edge signs for graphs ``start..stop-1``, shape ``(stop-start, P)``."""
    p = n * (n - 1) // 2
    idx = np.arange(start, stop, dtype=np.int64)
    powers = 3 ** np.arange(p - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % 3
    block = _DIGIT_SIGN[digits]
    block.flags.writeable = False
    return block


@lru_cache(maxsize=None)
def _incidence(n: int) -> np.ndarray:
    inc = np.zeros((n * (n - 1) // 2, n), dtype=np.int8)
    for k, (u, v) in enumerate(pairs(n)):
        inc[k, u] = inc[k, v] = 1
    return inc


def degree_block(n: int, start: int, stop: int) -> np.ndarray:
    """Signed degrees of graphs ``start..stop-1``, shape ``(stop-start, n)``."""
    signs = _sign_block(n, start, stop)
    if n < 2:
        return np.zeros((stop - start, n), dtype=np.int8)
    return signs @ _incidence(n)


def connected_mask(n: int, signs: np.ndarray) -> np.ndarray:
    """Row-wise connectivity of the underlying unsigned graphs."""
    if n <= 1:
        return np.ones(len(signs), dtype=bool)
    adj = np.zeros((len(signs), n, n), dtype=bool)
    for k, (u, v) in enumerate(pairs(n)):
        adj[:, u, v] = adj[:, v, u] = signs[:, k] != 0
    reach = adj[:, 0, :].copy()
    reach[:, 0] = True
    for _ in range(n - 1):
        reach = reach | np.any(reach[:, :, None] & adj, axis=1)
    return reach.all(axis=1)


BlockPredicate = Callable[[int, np.ndarray, np.ndarray], np.ndarray]


def find_first(
    n: int,
    predicate: BlockPredicate,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    n_jobs: int = 1,
) -> int | None:
    """Smallest graph index on ``n`` vertices satisfying ``predicate``.

    ``predicate(n, signs, degrees)`` gets a chunk's sign and degree
    matrices and returns a boolean row mask. Chunks are scanned in waves
    of ``n_jobs``; the minimum hit of the first wave with any hit wins, so
    the answer does not depend on ``n_jobs``.
    """
    budget.check(n)
    total = graph_count(n)
    bounds = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]

    def scan(bound: tuple[int, int]) -> int | None:
        lo, hi = bound
        signs = _sign_block(n, lo, hi)
        hits = np.flatnonzero(predicate(n, signs, degree_block(n, lo, hi)))
        return lo + int(hits[0]) if len(hits) else None

    if n_jobs <= 1:
        for bound in bounds:
            hit = scan(bound)
            if hit is not None:
                return hit
        return None
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        for w in range(0, len(bounds), n_jobs):
            hits = [h for h in pool.map(scan, bounds[w : w + n_jobs]) if h is not None]
            if hits:
                return min(hits)
    return None


def _sequence_predicate(seq: Sequence[int]) -> BlockPredicate:
    target = np.array(sorted(seq), dtype=np.int64)

    def predicate(n, signs, degrees):
        return np.all(np.sort(degrees, axis=1) == target, axis=1)

    return predicate


def _set_predicate(D: Iterable[int], require_connected: bool) -> BlockPredicate:
    values = np.array(sorted(D), dtype=np.int64)

    def predicate(n, signs, degrees):
        mask = np.all(np.isin(degrees, values), axis=1)
        for d in values:
            mask &= np.any(degrees == d, axis=1)
        if require_connected and mask.any():
            rows = np.flatnonzero(mask)
            mask[rows] = connected_mask(n, signs[rows])
        return mask

    return predicate


def find_sequence_witness(
    seq: Sequence[int], budget: EnumerationBudget = DEFAULT_BUDGET, n_jobs: int = 1
) -> int | None:
    return find_first(len(seq), _sequence_predicate(seq), budget, n_jobs)


def oracle_is_graphical(
    seq: Sequence[int], budget: EnumerationBudget = DEFAULT_BUDGET, n_jobs: int = 1
) -> bool:
    """Whether some signed graph on ``len(seq)`` vertices has this degree multiset."""
    return find_sequence_witness(seq, budget, n_jobs) is not None


def find_set_witness(
    D: Iterable[int],
    n: int,
    require_connected: bool,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    n_jobs: int = 1,
) -> int | None:
    D = D if isinstance(D, DegreeSet) else DegreeSet(D)
    if n == 0:
        budget.check(n)
        return None
    return find_first(n, _set_predicate(D, require_connected), budget, n_jobs)


def oracle_realizable_at_order(
    D: Iterable[int],
    n: int,
    require_connected: bool,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    n_jobs: int = 1,
) -> bool:
    return find_set_witness(D, n, require_connected, budget, n_jobs) is not None


def oracle_min_order(
    D: Iterable[int],
    require_connected: bool,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    n_jobs: int = 1,
) -> int:
    """Smallest order with a realization of ``D``, searching every order up to the budget.

    Raises :class:`BudgetExceeded` when nothing is found within the
    budget; that is a refusal, not a proof of non-existence.
    """
    D = D if isinstance(D, DegreeSet) else DegreeSet(D)
    for n in range(1, budget.max_order + 1):
        hit = find_set_witness(D, n, require_connected, budget, n_jobs)
        if hit is not None:
            log.debug("min order %d for %s, witness index %d", n, sorted(D), hit)
            return n
    raise BudgetExceeded(f"no realization of {sorted(D)} up to order {budget.max_order}")
