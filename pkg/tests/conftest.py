from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from idcodes import Digraph, SetSystem


def brute_gammas(D):
    """(gamma_s, gamma_id) from the definitions, over all subsets, using Python sets."""
    balls = [{v} | {u for (u, w) in D.arcs if w == v} for v in range(D.n)]
    best_s = best_id = None
    for k in range(D.n + 1):
        for C in combinations(range(D.n), k):
            C = set(C)
            traces = [frozenset(b & C) for b in balls]
            sep = len(set(traces)) == len(traces)
            dom = all(traces)
            if sep and best_s is None:
                best_s = k
            if sep and dom and best_id is None:
                best_id = k
    return best_s, best_id


@st.composite
def digraphs(draw, min_n=0, max_n=6, oriented=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(permutations(range(n), 2))
    if not pairs:
        return Digraph(n)
    arcs = draw(st.sets(st.sampled_from(pairs)))
    if oriented:
        arcs = {(u, v) for u, v in arcs if (v, u) not in arcs or u < v}
    return Digraph(n, frozenset(arcs))


@st.composite
def forest_digraphs(draw, max_n=7):
    """Closures of random rooted forests, built with apex and disjoint union."""
    from idcodes import K1, apex, disjoint_union

    def build(budget):
        if budget <= 1:
            return K1
        if draw(st.booleans()):
            return apex(build(budget - 1))
        split = draw(st.integers(1, budget - 1))
        return disjoint_union(build(split), build(budget - split))

    return build(draw(st.integers(1, max_n)))


@pytest.fixture
def four_sets():
    # elements labelled 1..4 in text output are 0..3 here
    return SetSystem(4, [{0}, {0, 2}, {1, 2}, {0, 2, 3}])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
