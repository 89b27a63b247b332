"""Exhaustive and oracle-backed acceptance checks.

Each ``criterion_*`` function returns a :class:`CriterionResult`; a
criterion passes only if every check holds *and* it finishes within its
time limit. ``level="quick"`` shrinks the random length-5 sample of
criterion 7 (and hence 8) for interactive use.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .dot_grammar import DotSyntaxError, parse_dot
from .graph import (
    SignedGraph,
    is_connected,
    negate_signs,
    signed_degree_sequence,
    signed_degree_set,
)
from .graphicality import is_graphical_chartrand, is_graphical_yan, realize_sequence
from .io import from_json, to_dot, to_json
from .oracle import oracle_is_graphical, oracle_min_order
from .realize import realize_negative_set, realize_positive_set, realize_set, replicate

RANDOM_SEED = 20240617
RANDOM_SAMPLES = {"quick": 50, "full": 500}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number:>2}: {self.title} ({self.seconds:.2f}s / limit {self.limit:g}s)"
        return text + (f" -- {self.detail}" if self.detail else "")


def subsets(values: range) -> Iterator[tuple[int, ...]]:
    values = list(values)
    for k in range(1, len(values) + 1):
        yield from itertools.combinations(values, k)


def _timed(number: int, title: str, limit: float, body: Callable[[], list[str]]) -> CriterionResult:
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        failures.append(f"took {elapsed:.2f}s, limit {limit:g}s")
    detail = "; ".join(failures[:5]) + (f" (+{len(failures) - 5} more)" if len(failures) > 5 else "")
    return CriterionResult(number, title, not failures, elapsed, limit, detail)


def _positive_ok(D, g: SignedGraph) -> list[str]:
    errors = []
    if not is_connected(g):
        errors.append(f"{D}: disconnected")
    if any(s < 0 for s in g.edges.values()):
        errors.append(f"{D}: has a negative edge")
    if g.order != max(D) + 1:
        errors.append(f"{D}: order {g.order} != {max(D) + 1}")
    if signed_degree_set(g) != set(D):
        errors.append(f"{D}: degree set {sorted(signed_degree_set(g))}")
    return errors


def criterion_1() -> CriterionResult:
    def body():
        errors = []
        for D in subsets(range(1, 7)):
            result = realize_positive_set(D)
            errors += _positive_ok(D, result.graph)
            if result.claimed_minimum_order != result.graph.order:
                errors.append(f"{D}: claimed minimum {result.claimed_minimum_order}")
        return errors

    return _timed(1, "positive sets realized at order max(D)+1", 1.0, body)


def criterion_2() -> CriterionResult:
    def body():
        errors = []
        for D in subsets(range(1, 5)):
            expected = max(D) + 1
            for connected in (True, False):
                got = oracle_min_order(D, require_connected=connected)
                if got != expected:
                    errors.append(f"{D} connected={connected}: min order {got} != {expected}")
        return errors

    return _timed(2, "oracle-certified minimum order for positive sets", 30.0, body)


def criterion_3() -> CriterionResult:
    def body():
        errors = []
        for P in subsets(range(1, 7)):
            D = tuple(-d for d in P)
            g = realize_negative_set(D).graph
            if not is_connected(g):
                errors.append(f"{D}: disconnected")
            if g.order != -min(D) + 1:
                errors.append(f"{D}: order {g.order}")
            if signed_degree_set(g) != set(D):
                errors.append(f"{D}: degree set {sorted(signed_degree_set(g))}")
            if g != negate_signs(realize_positive_set(P).graph):
                errors.append(f"{D}: not the negated positive realization")
        return errors

    return _timed(3, "negative sets mirror the positive construction", 1.0, body)


def _gluing_errors(D: tuple[int, ...], result) -> list[str]:
    g = result.graph
    positive = [d for d in D if d > 0]
    negative = [d for d in D if d < 0]
    if result.case == "III":
        ingredients = [realize_positive_set(positive).graph if positive else realize_negative_set(negative).graph]
    else:
        ingredients = [realize_positive_set(positive).graph, realize_negative_set(negative).graph]
    errors = []
    offset = 0
    for part in ingredients:
        for v in range(part.order):
            if g.degrees()[v + offset] != part.degrees()[v]:
                errors.append(f"{D}: vertex {v + offset} changed degree")
        for (u, v), s in part.edges.items():
            if g.sign(u + offset, v + offset) != s:
                errors.append(f"{D}: ingredient edge ({u}, {v}) altered")
        offset += part.order
    expected_added = tuple(range(offset, g.order))
    if result.added != expected_added:
        errors.append(f"{D}: added vertices {result.added} != {expected_added}")
    errors += [f"{D}: added vertex {y} has degree {g.degrees()[y]}" for y in result.added if g.degrees()[y] != 0]
    return errors


def criterion_4_5() -> tuple[CriterionResult, CriterionResult]:
    neutrality: list[str] = []

    def body():
        errors = []
        cases = set()
        for D in subsets(range(-4, 5)):
            try:
                result = realize_set(D)
            except Exception as exc:  # any escape counts as an uncovered branch
                errors.append(f"{D}: {type(exc).__name__}: {exc}")
                continue
            cases.add(result.case)
            if not is_connected(result.graph):
                errors.append(f"{D}: disconnected")
            if signed_degree_set(result.graph) != set(D):
                errors.append(f"{D}: degree set {sorted(signed_degree_set(result.graph))}")
            if result.case in ("III", "IV", "V"):
                neutrality.extend(_gluing_errors(D, result))
        if cases != {"I", "II", "III", "IV", "V"}:
            errors.append(f"cases reached: {sorted(cases)}")
        return errors

    c4 = _timed(4, "every subset of {-4..4} realized, connected", 5.0, body)
    detail = "; ".join(neutrality[:5])
    c5 = CriterionResult(5, "gluing leaves ingredient degrees intact, new vertices at 0",
                         not neutrality, c4.seconds, c4.limit, detail)
    return c4, c5


def criterion_6() -> CriterionResult:
    def body():
        errors = []
        for D in subsets(range(1, 5)):
            g = realize_positive_set(D).graph
            for k in range(1, 5):
                h = replicate(g, k)
                if h.order != k * g.order or signed_degree_set(h) != signed_degree_set(g):
                    errors.append(f"{D} k={k}: order {h.order}, set {sorted(signed_degree_set(h))}")
        return errors

    return _timed(6, "k disjoint copies keep the degree set", 1.0, body)


def exhaustive_sequences() -> list[tuple[int, ...]]:
    return list(itertools.product(range(-3, 4), repeat=4))


@lru_cache(maxsize=None)
def random_sequences(count: int, seed: int = RANDOM_SEED) -> tuple[tuple[int, ...], ...]:
    rng = random.Random(seed)
    return tuple(tuple(rng.randint(-4, 4) for _ in range(5)) for _ in range(count))


def _agreement(seqs) -> tuple[list[str], dict[tuple[int, ...], bool]]:
    errors, verdicts = [], {}
    for seq in seqs:
        a, b, c = is_graphical_chartrand(seq), is_graphical_yan(seq), oracle_is_graphical(seq)
        if not a == b == c:
            errors.append(f"{seq}: chartrand={a} yan={b} oracle={c}")
        verdicts[seq] = c
    return errors, verdicts


def criterion_7(level: str = "full") -> tuple[CriterionResult, dict[tuple[int, ...], bool]]:
    verdicts: dict[tuple[int, ...], bool] = {}

    def exhaustive():
        errors, v = _agreement(exhaustive_sequences())
        verdicts.update(v)
        return errors

    def sampled():
        errors, v = _agreement(random_sequences(RANDOM_SAMPLES[level]))
        verdicts.update(v)
        return errors

    a = _timed(7, "deciders agree with the oracle, all length-4 in [-3,3]", 30.0, exhaustive)
    b = _timed(7, f"deciders agree with the oracle, {RANDOM_SAMPLES[level]} random length-5 (seed {RANDOM_SEED})",
               180.0, sampled)
    merged = CriterionResult(
        7, a.title + " + " + b.title.split(", ", 1)[1], a.passed and b.passed,
        a.seconds + b.seconds, a.limit + b.limit, "; ".join(x for x in (a.detail, b.detail) if x),
    )
    return merged, verdicts


def criterion_8(verdicts: dict[tuple[int, ...], bool]) -> CriterionResult:
    def body():
        errors = []
        for seq, graphical in verdicts.items():
            g = realize_sequence(seq)
            if graphical and (g is None or signed_degree_sequence(g) != tuple(sorted(seq, reverse=True))):
                errors.append(f"{seq}: bad witness")
            if not graphical and g is not None:
                errors.append(f"{seq}: witness for a non-graphical sequence")
        return errors

    return _timed(8, f"witnesses are sound ({len(verdicts)} sequences)", 60.0, body)


def criterion_9() -> CriterionResult:
    def body():
        errors = []
        for seq in exhaustive_sequences():
            for decide in (is_graphical_chartrand, is_graphical_yan):
                verdict = decide(seq)
                if decide(tuple(-d for d in seq)) != verdict:
                    errors.append(f"{decide.__name__}{seq}: negation changes verdict")
                if any(decide(p) != verdict for p in set(itertools.permutations(seq))):
                    errors.append(f"{decide.__name__}{seq}: order changes verdict")
        return errors

    return _timed(9, "negation symmetry and permutation invariance", 30.0, body)


def _check_dot(text: str, g: SignedGraph) -> str | None:
    try:
        dot = parse_dot(text)
    except DotSyntaxError as exc:
        return f"DOT syntax error: {exc}"
    if dot.kind != "graph" or len(dot.nodes) != g.order or len(dot.edges) != len(g.edges):
        return "DOT parsed to the wrong structure"
    return None


def acceptance_graphs() -> list[SignedGraph]:
    graphs = [realize_positive_set(D).graph for D in subsets(range(1, 7))]
    graphs += [realize_negative_set([-d for d in D]).graph for D in subsets(range(1, 7))]
    graphs += [realize_set(D).graph for D in subsets(range(-4, 5))]
    graphs += [replicate(realize_positive_set(D).graph, k) for D in subsets(range(1, 5)) for k in range(1, 5)]
    return graphs


def criterion_10() -> CriterionResult:
    graphs = acceptance_graphs()

    def body():
        errors = []
        for g in graphs:
            text = to_json(g)
            if from_json(text) != g or to_json(from_json(text)) != text:
                errors.append(f"{g!r}: JSON round trip failed")
            dot = to_dot(g)
            if dot != to_dot(g):
                errors.append(f"{g!r}: DOT not canonical")
            problem = _check_dot(dot, g)
            if problem:
                errors.append(f"{g!r}: {problem}")
        return errors

    return _timed(10, f"JSON round trip and DOT grammar ({len(graphs)} graphs)", 5.0, body)


def run(level: str = "full") -> list[CriterionResult]:
    if level not in RANDOM_SAMPLES:
        raise ValueError(f"level must be one of {sorted(RANDOM_SAMPLES)}")
    c4, c5 = criterion_4_5()
    c7, verdicts = criterion_7(level)
    return [
        criterion_1(), criterion_2(), criterion_3(), c4, c5, criterion_6(),
        c7, criterion_8(verdicts), criterion_9(), criterion_10(),
    ]
