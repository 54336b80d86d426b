import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idcodes import (
    BipartiteGraph,
    Digraph,
    SetSystem,
    chain_tc,
    check_bipartite_code,
    check_code,
    digraph_to_bipartite,
    directed_cycle,
    edgeless,
    enumerate_digraphs,
    incidence_bipartite,
    min_discriminating_code,
    min_identifying_code,
    min_s_separating_code,
    min_separating_code,
)
from idcodes.codes import greedy_code, separates
from idcodes.digraph import is_twin_free
from idcodes.errors import NotIdentifiable, TwinsExist

from conftest import brute_gammas, digraphs

C3 = directed_cycle(3)
T3 = chain_tc(3)
PAIR = Digraph(2, {(0, 1), (1, 0)})


def test_check_code_c3_identifying():
    report = check_code(C3, [0, 1])
    assert report.identifying and report.undominated_witness is None


def test_check_code_chain_misses_source():
    report = check_code(T3, [1, 2])
    assert report.separating
    assert not report.dominating and report.undominated_witness == 0
    assert not report.identifying


def test_check_code_twins_unseparated():
    report = check_code(PAIR, [0, 1])
    assert not report.separating and report.unseparated_witness == (0, 1)


def test_unseparated_witness_is_lexicographically_smallest():
    # traces a, b, b, a under C = {0, 1}: pairs (0, 3) and (1, 2)
    D = Digraph(4, {(1, 2), (0, 3)})
    report = check_code(D, [0, 1])
    assert report.unseparated_witness == (0, 3)


@pytest.mark.parametrize(
    "D, size, code",
    [(edgeless(1), 0, set()), (C3, 2, {0, 1}), (T3, 2, {1, 2})],
)
def test_min_separating(D, size, code):
    result = min_separating_code(D)
    assert result.size == size and set(result.code) == code
    assert brute_gammas(D)[0] == size


@pytest.mark.parametrize("D, size, code", [(T3, 3, {0, 1, 2}), (C3, 2, {0, 1})])
def test_min_identifying(D, size, code):
    result = min_identifying_code(D)
    assert result.size == size and set(result.code) == code
    assert brute_gammas(D)[1] == size


def test_twins_raise():
    with pytest.raises(TwinsExist) as info:
        min_identifying_code(PAIR)
    assert (info.value.u, info.value.v) == (0, 1)
    with pytest.raises(TwinsExist):
        min_separating_code(PAIR)


def test_solver_matches_brute_force_exhaustively():
    for n in range(1, 4):
        for D in enumerate_digraphs(n, "all", "twin_free"):
            assert (min_separating_code(D).size, min_identifying_code(D).size) == brute_gammas(D)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6))
def test_solver_matches_brute_force_random(D):
    if not is_twin_free(D):
        return
    gs, gi = brute_gammas(D)
    s, i = min_separating_code(D), min_identifying_code(D)
    assert (s.size, i.size) == (gs, gi)
    assert check_code(D, s.code).separating
    assert check_code(D, i.code).identifying


@given(digraphs(max_n=6))
def test_greedy_code_is_valid(D):
    if is_twin_free(D):
        assert check_code(D, list(_members(greedy_code(D.in_masks, D.n, True)))).identifying


def _members(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


@given(digraphs(max_n=6), st.integers(0, 63), st.integers(0, 63))
def test_code_monotonicity(D, a, b):
    full = (1 << D.n) - 1
    small = a & full
    big = small | (b & full)
    r_small, r_big = check_code(D, _members(small)), check_code(D, _members(big))
    if r_small.separating:
        assert r_big.separating
    if r_small.dominating:
        assert r_big.dominating


def test_lexicographic_tie_break():
    # every 2-subset separates the three traces of C3; the smallest tuple wins
    assert set(min_separating_code(C3).code) == {0, 1}
    D = Digraph(4)  # edgeless: separating needs 3 vertices, (0, 1, 2) comes first
    assert set(min_separating_code(D).code) == {0, 1, 2}


# Bipartite codes


def test_four_set_bipartite_codes(four_sets):
    G = incidence_bipartite(four_sets)
    assert check_bipartite_code(G, range(4), "discriminating").ok
    sep = check_bipartite_code(G, [0, 2], "separating")
    assert not sep.separating and sep.unseparated_witness == (1, 3)
    report = check_bipartite_code(G, [1, 2, 3], "discriminating")
    assert report.separating and not report.dominating and report.undominated_witness == 0
    assert check_bipartite_code(G, [1, 2, 3], "separating").ok


@pytest.mark.parametrize(
    "sets, size, code",
    [
        ([{0}, {0, 2}, {1, 2}, {0, 2, 3}], 3, {0, 2, 3}),
        ([{0}, {1}, {2}], 3, {0, 1, 2}),
        ([{0}, {0, 1}, {0, 1, 2}], 3, {0, 1, 2}),
    ],
)
def test_min_discriminating(sets, size, code):
    G = incidence_bipartite(SetSystem(len(sets), sets))
    result = min_discriminating_code(G)
    assert result.size == size and set(result.code) == code


def test_min_discriminating_requires_identifiable():
    with pytest.raises(NotIdentifiable) as info:
        min_discriminating_code(BipartiteGraph(2, 2, {(0, 0), (1, 0)}))
    assert info.value.pair == (0, 1)
    with pytest.raises(NotIdentifiable) as info:
        min_discriminating_code(BipartiteGraph(2, 2, {(0, 0)}))
    assert info.value.undominated == 1


def test_min_s_separating_allows_one_empty():
    G = BipartiteGraph(2, 2, {(0, 0)})
    assert min_s_separating_code(G).size == 1


@settings(deadline=None)
@given(digraphs(max_n=5), st.integers(0, 31))
def test_codes_transfer_to_incidence_graph(D, c):
    if not is_twin_free(D):
        return
    code = [v for v in range(D.n) if c >> v & 1]
    G = digraph_to_bipartite(D)
    r = check_code(D, code)
    assert r.separating == check_bipartite_code(G, code, "separating").separating
    assert r.identifying == check_bipartite_code(G, code, "discriminating").ok
    assert min_identifying_code(D).size == min_discriminating_code(G).size


def test_separates_on_raw_balls():
    assert separates([1, 2, 3], 3)
    assert not separates([1, 3], 1)
