from itertools import permutations

import pytest
from hypothesis import given

from idcodes import (
    Digraph,
    VertexSet,
    chain_tc,
    directed_cycle,
    edgeless,
    enumerate_digraphs,
    find_twins,
    in_ball,
    out_ball,
    sources,
    transitive_closure,
)
from idcodes.digraph import count_digraphs, digraph_from_index, is_twin_free
from idcodes.errors import GuardExceeded, PreconditionError

from conftest import digraphs

C3 = directed_cycle(3)
T3 = chain_tc(3)


@pytest.mark.parametrize(
    "D, v, expected",
    [(edgeless(1), 0, {0}), (C3, 1, {0, 1}), (T3, 2, {0, 1, 2})],
)
def test_in_ball(D, v, expected):
    assert set(in_ball(D, v)) == expected


def test_ball_out_of_range():
    with pytest.raises(PreconditionError):
        in_ball(C3, 3)


@pytest.mark.parametrize(
    "D, expected",
    [(Digraph(2, {(0, 1), (1, 0)}), (0, 1)), (C3, None), (edgeless(2), None)],
)
def test_find_twins(D, expected):
    assert find_twins(D) == expected


@pytest.mark.parametrize("D, expected", [(T3, {0}), (C3, set()), (edgeless(2), {0, 1})])
def test_sources(D, expected):
    assert set(sources(D)) == expected


def test_transitive_closure_examples():
    path = Digraph(3, {(0, 1), (1, 2)})
    assert transitive_closure(path).arcs == {(0, 1), (1, 2), (0, 2)}
    assert transitive_closure(C3).arcs == set(permutations(range(3), 2))
    assert transitive_closure(edgeless(1)) == edgeless(1)


def test_digraph_rejects_loops_and_range():
    with pytest.raises(PreconditionError):
        Digraph(2, {(0, 0)})
    with pytest.raises(PreconditionError):
        Digraph(2, {(0, 2)})


def test_vertex_set_algebra():
    a = VertexSet.of(4, [0, 1])
    b = VertexSet.of(4, [1, 3])
    assert set(a & b) == {1}
    assert set(a | b) == {0, 1, 3}
    assert set(a - b) == {0}
    assert 1 in a and 3 not in a and len(a) == 2
    assert str(a) == "{0,1}"
    with pytest.raises(PreconditionError):
        VertexSet.of(2, [2])


def test_enumeration_counts():
    assert len(list(enumerate_digraphs(2, "all"))) == 4
    assert len(list(enumerate_digraphs(3, "oriented"))) == 27
    twin_free = list(enumerate_digraphs(2, "all", "twin_free"))
    # brute force: only the symmetric pair has equal in-balls
    brute = [D for D in enumerate_digraphs(2) if not (in_ball(D, 0) == in_ball(D, 1))]
    assert twin_free == brute and len(twin_free) == 3


def test_enumeration_is_a_bijection_and_stable():
    for mode in ("all", "oriented"):
        first = list(enumerate_digraphs(3, mode))
        assert len(set(first)) == count_digraphs(3, mode)
        assert first == list(enumerate_digraphs(3, mode))
        assert first[17] == digraph_from_index(3, 17, mode)


def test_enumeration_guard():
    with pytest.raises(GuardExceeded):
        list(enumerate_digraphs(6))
    with pytest.raises(GuardExceeded):
        count_digraphs(6, "oriented")


def test_oriented_enumeration_is_twin_free():
    for D in enumerate_digraphs(4, "oriented"):
        assert D.is_oriented and find_twins(D) is None


@given(digraphs())
def test_ball_contains_center_and_reverse_duality(D):
    R = D.reverse()
    for v in range(D.n):
        assert v in in_ball(D, v)
        assert in_ball(R, v) == out_ball(D, v)


@given(digraphs())
def test_closure_idempotent_and_monotone(D):
    T = transitive_closure(D)
    assert D.arcs <= T.arcs
    assert transitive_closure(T) == T


@given(digraphs())
def test_twin_free_agrees_with_find_twins(D):
    assert is_twin_free(D) == (find_twins(D) is None)
