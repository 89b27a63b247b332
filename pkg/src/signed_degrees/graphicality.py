"""Graphicality of signed degree sequences.

Two deciders are provided. :func:`is_graphical_chartrand` searches over
every admissible ``(r, s)`` split of the leading entry; :func:`is_graphical_yan`
takes the single split picked by :func:`compute_m`. Both work on
standardized sequences (see :func:`standardize`), recursing on a sequence
one entry shorter at every level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Sequence, Union

from .graph import DomainError, GraphBuilder, Sign, SignedGraph


class Rejection(str, Enum):
    ODD_SUM = "odd-sum"
    MAGNITUDE_BOUND = "magnitude-bound"


@dataclass(frozen=True)
class AllZero:
    n: int


@dataclass(frozen=True)
class Standard:
    seq: tuple[int, ...]
    negated: bool = False


@dataclass(frozen=True)
class Rejected:
    reason: Rejection


StandardizationOutcome = Union[AllZero, Standard, Rejected]


def is_standard(seq: Sequence[int]) -> bool:
    n = len(seq)
    return (
        n > 0
        and all(a >= b for a, b in zip(seq, seq[1:]))
        and sum(seq) % 2 == 0
        and seq[0] > 0
        and all(abs(d) < n for d in seq)
        and abs(seq[0]) >= abs(seq[-1])
    )


def _needs_negation(seq: Sequence[int]) -> bool:
    return seq[0] <= 0 or abs(seq[0]) < abs(seq[-1])


def standardize(seq: Sequence[int]) -> StandardizationOutcome:
    """Sort, flip all signs if needed, then apply the parity and magnitude checks."""
    seq = tuple(sorted(seq, reverse=True))
    if not any(seq):
        return AllZero(len(seq))
    negated = _needs_negation(seq)
    if negated:
        seq = tuple(sorted((-d for d in seq), reverse=True))
    if sum(seq) % 2:
        return Rejected(Rejection.ODD_SUM)
    if any(abs(d) >= len(seq) for d in seq):
        return Rejected(Rejection.MAGNITUDE_BOUND)
    return Standard(seq, negated)


def _check_split(seq: Sequence[int], r: int, s: int) -> None:
    if not is_standard(seq):
        raise DomainError(f"not a standard sequence: {list(seq)}")
    n, d1 = len(seq), seq[0]
    if r - s != d1 or s < 0 or 2 * s > n - 1 - d1:
        raise DomainError(f"invalid split r={r}, s={s} for {list(seq)}")


def reduce_chartrand(seq: Sequence[int], r: int, s: int) -> tuple[int, ...]:
    """Drop ``d1``, decrement the next ``r`` entries and increment the last ``s``."""
    _check_split(seq, r, s)
    n = len(seq)
    out = list(seq[1:])
    for i in range(r):
        out[i] -= 1
    for i in range(n - 1 - s, n - 1):
        out[i] += 1
    return tuple(out)


def _decide(seq: Sequence[int], on_standard: Callable[[tuple[int, ...]], bool]) -> bool:
    outcome = standardize(seq)
    if isinstance(outcome, AllZero):
        return True
    if isinstance(outcome, Rejected):
        return False
    return on_standard(outcome.seq)


@lru_cache(maxsize=None)
def _chartrand_standard(seq: tuple[int, ...]) -> bool:
    d1, n = seq[0], len(seq)
    return any(
        _decide(reduce_chartrand(seq, d1 + s, s), _chartrand_standard)
        for s in range((n - 1 - d1) // 2 + 1)
    )


def is_graphical_chartrand(seq: Sequence[int]) -> bool:
    """Decide graphicality by exhaustive search over ``(r, s)`` splits (memoized)."""
    return _decide(seq, _chartrand_standard)


def compute_m(seq: Sequence[int]) -> int:
    """Number of extra positive/negative pairs given to the leading vertex.

    ``m = 0`` is always admissible. For ``m >= 1`` we need
    ``seq[d1 + m] > seq[n - m]`` (0-based) and ``2m <= n - 1 - d1``; since
    the sequence is non-increasing the admissible ``m`` form a prefix, so
    the scan stops at the first failure.
    """
    if not is_standard(seq):
        raise DomainError(f"not a standard sequence: {list(seq)}")
    n, d1 = len(seq), seq[0]
    m = 0
    while 2 * (m + 1) <= n - 1 - d1 and seq[d1 + m + 1] > seq[n - m - 1]:
        m += 1
    return m


def _yan_standard(seq: tuple[int, ...]) -> bool:
    m = compute_m(seq)
    return _decide(reduce_chartrand(seq, seq[0] + m, m), _yan_standard)


def is_graphical_yan(seq: Sequence[int]) -> bool:
    """Decide graphicality with one deterministic reduction per level."""
    return _decide(seq, _yan_standard)


@dataclass(frozen=True)
class Negate:
    pass


@dataclass(frozen=True)
class Reduce:
    """One reduction step.

    ``permutation[i]`` is the vertex holding sorted position ``i`` right
    before the step: position 0 is removed, positions ``1..r`` lose one and
    the last ``s`` positions gain one.
    """

    r: int
    s: int
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Negate | Reduce, ...]
    terminal: int

    @property
    def order(self) -> int:
        return self.terminal + sum(isinstance(step, Reduce) for step in self.steps)

    def replay(self, seq: Sequence[int]) -> dict[int, int]:
        """Apply the steps to ``seq`` (indexed by vertex); return the residual degrees."""
        if len(seq) != self.order:
            raise DomainError(f"trace is for {self.order} vertices, got {len(seq)}")
        current = dict(enumerate(seq))
        for step in self.steps:
            if isinstance(step, Negate):
                current = {v: -d for v, d in current.items()}
                continue
            perm, n = step.permutation, len(step.permutation)
            del current[perm[0]]
            for v in perm[1 : step.r + 1]:
                current[v] -= 1
            for v in perm[n - step.s :]:
                current[v] += 1
        return current

    def to_graph(self) -> SignedGraph:
        """Witness graph: vertex ``i`` realizes entry ``i`` of the traced sequence."""
        b = GraphBuilder(self.order)
        frame = Sign.POSITIVE
        for step in self.steps:
            if isinstance(step, Negate):
                frame = -frame
                continue
            perm, n = step.permutation, len(step.permutation)
            head = perm[0]
            for v in perm[1 : step.r + 1]:
                b.add_edge(head, v, frame)
            for v in perm[n - step.s :]:
                b.add_edge(head, v, -frame)
        return b.build()


def _sorted_labels(current: dict[int, int]) -> tuple[int, ...]:
    return tuple(sorted(current, key=lambda v: (-current[v], v)))


def reduction_trace(seq: Sequence[int]) -> ReductionTrace | None:
    """Record a successful chain of reductions, or ``None`` if not graphical."""
    if not is_graphical_chartrand(seq):
        return None
    current = dict(enumerate(seq))
    steps: list[Negate | Reduce] = []
    while any(current.values()):
        perm = _sorted_labels(current)
        if _needs_negation([current[v] for v in perm]):
            steps.append(Negate())
            current = {v: -d for v, d in current.items()}
            perm = _sorted_labels(current)
        ordered = tuple(current[v] for v in perm)
        d1, n = ordered[0], len(ordered)
        for s in range((n - 1 - d1) // 2 + 1):
            if is_graphical_chartrand(reduce_chartrand(ordered, d1 + s, s)):
                break
        else:  # pragma: no cover - excluded by the decision above
            raise AssertionError(f"no admissible split for {ordered}")
        r = d1 + s
        steps.append(Reduce(r, s, perm))
        del current[perm[0]]
        for v in perm[1 : r + 1]:
            current[v] -= 1
        for v in perm[n - s :]:
            current[v] += 1
    return ReductionTrace(tuple(steps), terminal=len(current))


def realize_sequence(seq: Sequence[int]) -> SignedGraph | None:
    """A signed graph whose vertex ``i`` has signed degree ``seq[i]``, if one exists."""
    trace = reduction_trace(seq)
    return None if trace is None else trace.to_graph()
