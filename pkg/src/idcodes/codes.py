"""Separating, identifying and discriminating codes: checks and exact minima.

Every check works on a list of "balls" (bitmasks): in-balls for a digraph,
S-neighbourhoods over T for a bipartite graph. A code ``C`` separates two
balls when their traces ``ball & C`` differ and dominates a ball when its
trace is nonempty.

Exact minimisation scans subsets by increasing size, each size in
lexicographic order of the sorted member tuple, so the reported code is the
lexicographically smallest minimum code. The problem is NP-hard in general;
``MAX_SOLVER_SIZE`` bounds the universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .bipartite import BipartiteGraph
from .digraph import Digraph, VertexSet, find_twins, mask_of
from .errors import GuardExceeded, NotIdentifiable, PreconditionError, TwinsExist

MAX_SOLVER_SIZE = 20


@dataclass(frozen=True)
class CodeReport:
    dominating: bool
    undominated_witness: int | None
    separating: bool
    unseparated_witness: tuple[int, int] | None
    kind: str = "identifying"

    @property
    def identifying(self) -> bool:
        return self.dominating and self.separating

    @property
    def ok(self) -> bool:
        """Whether the code is of the kind that was asked for."""
        return self.separating if self.kind == "separating" else self.identifying


class CodeResult(NamedTuple):
    size: int
    code: VertexSet


def _first_collision(traces: Sequence[int]) -> tuple[int, int] | None:
    buckets: dict[int, list[int]] = {}
    for v, tr in enumerate(traces):
        buckets.setdefault(tr, []).append(v)
    pairs = [(b[0], b[1]) for b in buckets.values() if len(b) > 1]
    return min(pairs) if pairs else None


def analyze(balls: Sequence[int], code: int, kind: str = "identifying") -> CodeReport:
    traces = [b & code for b in balls]
    undominated = next((v for v, tr in enumerate(traces) if not tr), None)
    pair = None if len(set(traces)) == len(traces) else _first_collision(traces)
    return CodeReport(undominated is None, undominated, pair is None, pair, kind)


def separates(balls: Sequence[int], code: int) -> bool:
    return len({b & code for b in balls}) == len(balls)


def discriminates(balls: Sequence[int], code: int) -> bool:
    traces = {b & code for b in balls}
    return len(traces) == len(balls) and 0 not in traces


def unseparated_pairs(balls: Sequence[int], code: int) -> list[tuple[int, int]]:
    traces = [b & code for b in balls]
    return [(u, v) for u, v in combinations(range(len(balls)), 2) if traces[u] == traces[v]]


def _as_mask(code, universe: int) -> int:
    if isinstance(code, VertexSet):
        if code.universe_size != universe:
            raise PreconditionError(f"code over universe {code.universe_size}, expected {universe}")
        return code.bits
    code = list(code)
    for v in code:
        if not 0 <= v < universe:
            raise PreconditionError(f"code member {v} out of range [0, {universe})")
    return mask_of(code)


def greedy_code(balls: Sequence[int], universe: int, dominate: bool) -> int:
    """Greedy code: repeatedly add the element leaving the fewest unresolved constraints.

    Unresolved constraints are unseparated pairs plus, if ``dominate``,
    undominated balls.
    """
    def cost(code: int) -> int:
        counts: dict[int, int] = {}
        for b in balls:
            tr = b & code
            counts[tr] = counts.get(tr, 0) + 1
        c = sum(k * (k - 1) // 2 for k in counts.values())
        if dominate:
            c += counts.get(0, 0)
        return c

    code = 0
    current = cost(code)
    while current:
        best = None
        for x in range(universe):
            if code >> x & 1:
                continue
            c = cost(code | 1 << x)
            if best is None or c < best[0]:
                best = (c, x)
        if best is None:
            raise PreconditionError("the full universe is not a valid code")
        current, x = best
        code |= 1 << x
    return code


def minimum_code(balls: Sequence[int], universe: int, dominate: bool) -> int:
    """Lexicographically smallest minimum-size code over ``range(universe)``."""
    if universe > MAX_SOLVER_SIZE:
        raise GuardExceeded(f"exact solver limited to {MAX_SOLVER_SIZE} elements")
    count = len(balls)
    # trace-count lower bound: k codewords give 2**k traces (2**k - 1 nonempty)
    lower = count.bit_length() if dominate else max(count - 1, 0).bit_length()
    upper = bin(greedy_code(balls, universe, dominate)).count("1")
    valid = discriminates if dominate else separates
    for k in range(min(lower, upper), upper + 1):
        for combo in combinations(range(universe), k):
            code = mask_of(combo)
            if valid(balls, code):
                return code
    raise AssertionError("greedy upper bound was not attained")  # pragma: no cover


# Digraphs


def check_code(D: Digraph, C) -> CodeReport:
    return analyze(D.in_masks, _as_mask(C, D.n))


def _require_twin_free(D: Digraph) -> None:
    twins = find_twins(D)
    if twins is not None:
        raise TwinsExist(*twins)


def min_separating_code(D: Digraph) -> CodeResult:
    _require_twin_free(D)
    code = minimum_code(D.in_masks, D.n, dominate=False)
    return CodeResult(bin(code).count("1"), VertexSet(D.n, code))


def min_identifying_code(D: Digraph) -> CodeResult:
    _require_twin_free(D)
    code = minimum_code(D.in_masks, D.n, dominate=True)
    return CodeResult(bin(code).count("1"), VertexSet(D.n, code))


def gamma_s(D: Digraph) -> int:
    return min_separating_code(D).size


def gamma_id(D: Digraph) -> int:
    return min_identifying_code(D).size


# Bipartite graphs: codes are subsets of T that must tell S-vertices apart.

_MODES = ("separating", "discriminating")


def check_bipartite_code(G: BipartiteGraph, C: Iterable[int], mode: str = "discriminating") -> CodeReport:
    if mode not in _MODES:
        raise PreconditionError(f"mode must be one of {_MODES}")
    kind = "separating" if mode == "separating" else "identifying"
    return analyze(G.s_masks, _as_mask(C, G.t_size), kind)


def _require_identifiable(G: BipartiteGraph, dominate: bool) -> None:
    report = analyze(G.s_masks, (1 << G.t_size) - 1)
    if not report.separating:
        raise NotIdentifiable(pair=report.unseparated_witness)
    if dominate and not report.dominating:
        raise NotIdentifiable(undominated=report.undominated_witness)


def min_discriminating_code(G: BipartiteGraph) -> CodeResult:
    _require_identifiable(G, dominate=True)
    code = minimum_code(G.s_masks, G.t_size, dominate=True)
    return CodeResult(bin(code).count("1"), VertexSet(G.t_size, code))


def min_s_separating_code(G: BipartiteGraph) -> CodeResult:
    _require_identifiable(G, dominate=False)
    code = minimum_code(G.s_masks, G.t_size, dominate=False)
    return CodeResult(bin(code).count("1"), VertexSet(G.t_size, code))
