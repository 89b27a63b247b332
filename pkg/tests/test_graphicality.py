import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_degrees import (
    DomainError,
    compute_m,
    is_graphical_chartrand,
    is_graphical_yan,
    oracle_is_graphical,
    realize_sequence,
    reduce_chartrand,
    reduction_trace,
    standardize,
)
from signed_degrees.graphicality import (
    AllZero,
    Negate,
    Reduce,
    Rejected,
    Rejection,
    Standard,
    is_standard,
)

from .strategies import brute_force_degree_multisets

DECIDERS = [is_graphical_chartrand, is_graphical_yan]


@pytest.fixture(scope="module")
def achievable():
    return {n: brute_force_degree_multisets(n) for n in range(6)}


def brute(seq, achievable):
    return tuple(sorted(seq)) in achievable[len(seq)]


@pytest.mark.parametrize(
    "seq, outcome",
    [
        ([0, 0], AllZero(2)),
        ([], AllZero(0)),
        ([-1, -1], Standard((1, 1), negated=True)),
        ([3, 1], Rejected(Rejection.MAGNITUDE_BOUND)),
        ([1, 1, 1], Rejected(Rejection.ODD_SUM)),
        ([1, 2, 1], Standard((2, 1, 1), negated=False)),
        ([1, -2, 1], Standard((2, -1, -1), negated=True)),
    ],
)
def test_standardize(seq, outcome):
    assert standardize(seq) == outcome


@given(st.lists(st.integers(-6, 6), max_size=7))
def test_standardize_produces_standard_sequences(seq):
    outcome = standardize(seq)
    if isinstance(outcome, Standard):
        assert is_standard(outcome.seq)
        assert sorted(outcome.seq) == sorted(-d if outcome.negated else d for d in seq)


@pytest.mark.parametrize(
    "seq, r, s, expected",
    [
        ((2, 2, 2), 2, 0, (1, 1)),
        ((1, 1), 1, 0, (0,)),
        ((1, -1), 1, 0, (-2,)),
        ((1, 1, 0, 0), 2, 1, (0, -1, 1)),
    ],
)
def test_reduce_chartrand(seq, r, s, expected):
    assert reduce_chartrand(seq, r, s) == expected


@pytest.mark.parametrize(
    "seq, r, s",
    [
        ((2, 2, 2), 3, 1),  # s beyond (n-1-d1)/2
        ((2, 2, 2), 1, 0),  # r - s != d1
        ((2, 2, 3), 2, 0),  # not standard
        ((1, 1, 0, 0), 3, 2),
    ],
)
def test_reduce_chartrand_domain(seq, r, s):
    with pytest.raises(DomainError):
        reduce_chartrand(seq, r, s)


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([0, 0, 0], True),
        ([2, 2, 2], True),
        ([2, 2, -2], False),
        ([1, -1], False),
        ([0], True),
        ([], True),
    ],
)
@pytest.mark.parametrize("decide", DECIDERS)
def test_decider_examples(decide, seq, expected, achievable):
    assert brute(seq, achievable) is expected
    assert decide(seq) is expected


def test_compute_m():
    assert compute_m((2, 2, 2)) == 0
    assert compute_m((1, 1)) == 0
    # n=6, d1=2: m=1 allowed since 2m <= 3 and seq[3]=2 > seq[5]=-1
    assert compute_m((2, 2, 2, 2, -1, -1)) == 1
    # ties block any extra pair
    assert compute_m((1, 1, 0, 0, 0, 0)) == 0
    with pytest.raises(DomainError):
        compute_m((1, 2))


def test_m_convention_on_the_spec_example():
    seq = (2, 2, 2, 2, -1, -1)
    assert is_graphical_yan(seq) == is_graphical_chartrand(seq) == oracle_is_graphical(seq)


@pytest.mark.parametrize("n", range(6))
def test_deciders_match_brute_force_on_every_multiset(n, achievable):
    for seq in itertools.combinations_with_replacement(range(-(n - 1), n), n):
        truth = brute(seq, achievable)
        assert is_graphical_chartrand(seq) == truth, seq
        assert is_graphical_yan(seq) == truth, seq


@given(st.lists(st.integers(-4, 4), max_size=6))
def test_odd_sum_is_never_graphical(seq):
    if sum(seq) % 2:
        assert not is_graphical_chartrand(seq)
        assert not is_graphical_yan(seq)


@given(st.lists(st.integers(-4, 4), max_size=6), st.randoms())
def test_symmetries(seq, rnd):
    shuffled = list(seq)
    rnd.shuffle(shuffled)
    for decide in DECIDERS:
        assert decide(seq) == decide([-d for d in seq]) == decide(shuffled)


def test_witness_examples():
    g = realize_sequence([1, 1])
    assert g.order == 2 and dict(g.edges) == {(0, 1): 1}
    assert sorted(realize_sequence([2, 2, 2]).degrees()) == [2, 2, 2]
    assert realize_sequence([1, -1]) is None
    assert realize_sequence([]).order == 0


@given(st.lists(st.integers(-5, 5), max_size=7))
def test_witness_matches_input_vertexwise(seq):
    g = realize_sequence(seq)
    if is_graphical_chartrand(seq):
        assert g.degrees() == tuple(seq)
    else:
        assert g is None


@given(st.lists(st.integers(-4, 4), max_size=7))
def test_trace_replays_to_zero(seq):
    trace = reduction_trace(seq)
    if trace is None:
        return
    residual = trace.replay(seq)
    assert len(residual) == trace.terminal
    assert not any(residual.values())
    assert trace.order == len(seq)
    reduces = [step for step in trace.steps if isinstance(step, Reduce)]
    assert [len(step.permutation) for step in reduces] == list(range(len(seq), trace.terminal, -1))


def test_trace_records_negation():
    trace = reduction_trace([-1, -1])
    assert trace.steps[0] == Negate()
    assert trace.to_graph().edges == {(0, 1): -1}
