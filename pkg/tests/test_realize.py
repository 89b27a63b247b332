import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signed_degrees import (
    DomainError,
    Sign,
    SignedGraph,
    is_connected,
    negate_signs,
    oracle_realizable_at_order,
    realize_negative_set,
    realize_positive_set,
    realize_set,
    replicate,
    signed_degree_sequence,
    signed_degree_set,
)
from signed_degrees.oracle import graph_from_index, index_of


def test_single_positive_degree_is_complete_graph():
    result = realize_positive_set({2})
    assert result.graph == SignedGraph.complete(3)
    assert result.claimed_minimum_order == 3


def test_two_positive_degrees_give_star():
    g = realize_positive_set({1, 3}).graph
    assert g.order == 4
    assert sorted(g.degrees()) == [1, 1, 1, 3]
    assert len(g.edges) == 3


def test_three_positive_degrees():
    g = realize_positive_set({1, 2, 3}).graph
    # inner K2 (degree 2 each), the K1 clique (degree 3), one pendant (degree 1)
    assert g.degrees() == (2, 2, 3, 1)
    assert signed_degree_sequence(g) == (3, 2, 2, 1)


def test_negative_examples():
    assert realize_negative_set({-2}).graph == SignedGraph.complete(3, Sign.NEGATIVE)
    star = realize_negative_set({-1, -3})
    assert star.graph.order == 4 and star.claimed_minimum_order == 4
    assert signed_degree_set(star.graph) == {-1, -3}
    assert realize_negative_set({-1}).graph == SignedGraph.complete(2, Sign.NEGATIVE)


@pytest.mark.parametrize("bad", [set(), {0}, {1, -1}, {1, 0}])
def test_positive_domain(bad):
    with pytest.raises(DomainError):
        realize_positive_set(bad)


@pytest.mark.parametrize("bad", [set(), {0}, {-1, 1}, {-1, 0}])
def test_negative_domain(bad):
    with pytest.raises(DomainError):
        realize_negative_set(bad)


def test_zero_is_a_single_vertex():
    result = realize_set({0})
    assert result.graph == SignedGraph.empty(1)
    assert result.claimed_minimum_order == 1


@pytest.mark.parametrize(
    "D, case, order, degrees",
    [
        # K2(+) on 0,1; new x=2, y=3; +ux, +vy, -uy, -vx
        ({1, 0}, "III", 4, (1, 1, 0, 0)),
        ({-1, 0}, "III", 4, (-1, -1, 0, 0)),
        # K2(+) on 0,1 and K2(-) on 2,3; +ux, +vy, -uy, -vx
        ({1, -1}, "IV", 4, (1, 1, -1, -1)),
        # K2(+) on 0,1, K2(-) on 2,3, y=4; +uy, +vx, -ux, -vy with x=2
        ({1, -1, 0}, "V", 5, (1, 1, -1, -1, 0)),
    ],
)
def test_gluing_hand_evaluated(D, case, order, degrees):
    result = realize_set(D)
    g = result.graph
    assert result.case == case
    assert result.claimed_minimum_order is None
    assert g.order == order and g.degrees() == degrees
    assert is_connected(g)
    # the brute-force enumeration at this order contains the graph, and agrees D is realizable there
    assert graph_from_index(order, index_of(g)) == g
    assert oracle_realizable_at_order(D, order, require_connected=True)


def test_case_v_edges():
    g = realize_set({1, -1, 0}).graph
    assert g.sign(0, 4) is Sign.POSITIVE and g.sign(1, 2) is Sign.POSITIVE
    assert g.sign(0, 2) is Sign.NEGATIVE and g.sign(1, 4) is Sign.NEGATIVE


def test_realize_set_delegates_single_sign():
    assert realize_set({1, 3}).graph == realize_positive_set({1, 3}).graph
    assert realize_set({-1, -3}).claimed_minimum_order == 4
    with pytest.raises(DomainError):
        realize_set([])


def test_replicate_examples():
    k3 = SignedGraph.complete(3)
    two = replicate(k3, 2)
    assert two.order == 6 and signed_degree_set(two) == {2}
    assert replicate(k3, 1) == k3
    star = realize_positive_set({1, 3}).graph
    three = replicate(star, 3)
    assert three.order == 12
    assert sorted(three.degrees()) == [1] * 9 + [3] * 3
    assert not is_connected(three)
    with pytest.raises(DomainError):
        replicate(k3, 0)


positive_sets = st.sets(st.integers(1, 8), min_size=1)


@given(positive_sets)
def test_positive_realization_properties(D):
    result = realize_positive_set(D)
    g = result.graph
    assert is_connected(g)
    assert all(s is Sign.POSITIVE for s in g.edges.values())
    assert g.order == max(D) + 1 == result.claimed_minimum_order
    assert signed_degree_set(g) == D


@given(positive_sets)
def test_negative_is_conjugate_of_positive(D):
    neg = realize_negative_set({-d for d in D}).graph
    assert neg == negate_signs(realize_positive_set(D).graph)


@given(st.sets(st.integers(-5, 5), min_size=1))
def test_realize_set_exact(D):
    g = realize_set(D).graph
    assert is_connected(g)
    assert signed_degree_set(g) == D


def test_realization_is_deterministic():
    for D in itertools.islice(itertools.combinations(range(-3, 4), 3), 20):
        assert realize_set(D).graph == realize_set(D).graph


@given(st.sets(st.integers(1, 5), min_size=1), st.integers(1, 5))
def test_replicate_properties(D, k):
    g = realize_positive_set(D).graph
    h = replicate(g, k)
    assert h.order == k * g.order
    assert signed_degree_set(h) == signed_degree_set(g)
