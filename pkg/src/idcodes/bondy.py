"""Set systems, distinguishing elements and extremal systems.

A set system is a ground set ``0..m-1`` with an ordered list of subsets. The
trace of a set after deleting elements ``R`` is ``A & ~R``. Bondy's theorem
guarantees that ``n`` distinct subsets of an ``n``-set stay distinct after
deleting some single element; a system is *extremal* when no such element
also keeps every trace nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .bipartite import BipartiteGraph, all_perfect_matchings
from .digraph import Digraph, find_twins, mask_of, members_of, popcount
from .errors import ConstructionFailed, NoElement, PreconditionError, TwinsExist
from .family import RootedForest, recognize_family

MAX_FALLBACK_MATCHING_SIZE = 8


@dataclass(frozen=True)
class SetSystem:
    ground_size: int
    sets: tuple[frozenset, ...]

    def __post_init__(self):
        sets = tuple(frozenset(int(e) for e in s) for s in self.sets)
        for s in sets:
            for e in s:
                if not 0 <= e < self.ground_size:
                    raise PreconditionError(f"element {e} outside ground set of size {self.ground_size}")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_masks(cls, ground_size: int, masks: Iterable[int]) -> "SetSystem":
        return cls(ground_size, tuple(frozenset(members_of(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(s) for s in self.sets)

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def distinct(self) -> bool:
        return len(set(self.masks)) == len(self.masks)

    @property
    def nonempty(self) -> bool:
        return all(self.masks)

    def traces(self, removed: int) -> list[int]:
        return [m & ~removed for m in self.masks]


def _distinct_after(masks, removed: int) -> bool:
    return len({m & ~removed for m in masks}) == len(masks)


def _good_after(masks, removed: int) -> bool:
    traces = {m & ~removed for m in masks}
    return len(traces) == len(masks) and 0 not in traces


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def bondy_element(sys: SetSystem) -> int:
    """Smallest element whose deletion keeps all sets distinct."""
    _require(sys.distinct, "sets must be pairwise distinct")
    _require(len(sys) <= sys.ground_size, "more sets than ground elements")
    for x in range(sys.ground_size):
        if _distinct_after(sys.masks, 1 << x):
            return x
    raise NoElement("no element keeps the traces distinct")


def bondy_reduce(sys: SetSystem) -> frozenset:
    """Delete ``m - |sets| + 1`` elements keeping the traces distinct.

    Greedy: repeatedly delete the smallest element that keeps distinctness.
    While more than ``|sets| - 1`` elements remain, some distinguishing set
    of size ``|sets| - 1`` exists and anything outside it is deletable.
    """
    _require(len(sys) >= 1, "need at least one set")
    _require(sys.distinct, "sets must be pairwise distinct")
    _require(len(sys) <= sys.ground_size, "more sets than ground elements")
    removed = 0
    for _ in range(sys.ground_size - len(sys) + 1):
        for x in range(sys.ground_size):
            if not removed >> x & 1 and _distinct_after(sys.masks, removed | 1 << x):
                removed |= 1 << x
                break
        else:
            raise NoElement(f"stuck after deleting {members_of(removed)}")
    return frozenset(members_of(removed))


def bondy_reduce_nonempty(sys: SetSystem) -> frozenset:
    """Delete ``m - |sets|`` elements keeping the traces nonempty and distinct."""
    _require(sys.distinct and sys.nonempty, "sets must be pairwise distinct and nonempty")
    _require(len(sys) < sys.ground_size, "need fewer sets than ground elements")
    x0_set = bondy_reduce(sys)
    removed = mask_of(x0_set)
    # at most one trace can be empty; give back one of its elements
    empty = [m for m in sys.masks if not m & ~removed]
    restore = (empty[0] & removed) if empty else removed
    x0 = min(members_of(restore))
    result = removed & ~(1 << x0)
    if not _good_after(sys.masks, result):
        raise NoElement(f"deleting {members_of(result)} does not keep traces good")
    return frozenset(members_of(result))


@dataclass(frozen=True)
class ExtremalCheck:
    """Outcome of an extremality test.

    On failure, ``element`` is a witness element (a good deletion for the
    direct test, an element missing from the union for the characterised
    test) or ``set_index`` names a set with no removable element.
    """

    extremal: bool
    element: Optional[int] = None
    set_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.extremal


def _require_square(sys: SetSystem) -> None:
    _require(len(sys) == sys.ground_size, "need as many sets as ground elements")
    _require(sys.distinct and sys.nonempty, "sets must be pairwise distinct and nonempty")


def good_element(sys: SetSystem) -> int | None:
    """Smallest element whose deletion leaves all traces nonempty and distinct."""
    for x in range(sys.ground_size):
        if _good_after(sys.masks, 1 << x):
            return x
    return None


def is_extremal_direct(sys: SetSystem) -> ExtremalCheck:
    _require_square(sys)
    x = good_element(sys)
    return ExtremalCheck(True) if x is None else ExtremalCheck(False, element=x)


def is_extremal_characterized(sys: SetSystem) -> ExtremalCheck:
    """Union covers the ground set and every set of size >= 2 drops to another set."""
    _require_square(sys)
    union = 0
    for m in sys.masks:
        union |= m
    missing = sys.full & ~union
    if missing:
        return ExtremalCheck(False, element=members_of(missing)[0])
    present = set(sys.masks)
    for i, m in enumerate(sys.masks):
        if popcount(m) >= 2 and not any(m & ~(1 << x) in present for x in members_of(m)):
            return ExtremalCheck(False, set_index=i)
    return ExtremalCheck(True)


# Incidence graphs and conversions


def incidence_bipartite(sys: SetSystem) -> BipartiteGraph:
    edges = frozenset((i, e) for i, s in enumerate(sys.sets) for e in s)
    return BipartiteGraph(len(sys), sys.ground_size, edges)


def digraph_to_bipartite(D: Digraph) -> BipartiteGraph:
    """S-vertex ``i`` is joined to T-vertex ``j`` iff ``j`` is in the in-ball of ``i``.

    The T-neighbourhood of each S-vertex is its in-ball, so codes transfer
    between the two settings verbatim. The diagonal is the designated matching.
    """
    edges = {(i, i) for i in range(D.n)} | {(v, u) for u, v in D.arcs}
    return BipartiteGraph(D.n, D.n, frozenset(edges), tuple((i, i) for i in range(D.n)))


def bipartite_to_digraph(G: BipartiteGraph) -> Digraph:
    """Digraph on S with arc ``x -> y`` iff the partner of ``x`` is adjacent to ``y``."""
    if not G.has_perfect_matching:
        raise PreconditionError("bipartite graph needs a designated perfect matching")
    owner = {t: s for s, t in G.matching}
    arcs = {(owner[t], y) for y, t in G.edges if owner[t] != y}
    return Digraph(G.s_size, frozenset(arcs))


def system_from_digraph(D: Digraph) -> SetSystem:
    twins = find_twins(D)
    if twins is not None:
        raise TwinsExist(*twins)
    return SetSystem.from_masks(D.n, D.in_masks)


# Extremal systems as family digraphs


@dataclass(frozen=True)
class Extremal:
    digraph: Digraph
    forest: RootedForest
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NotExtremal:
    element: int


def _assign_parents(masks: tuple[int, ...]) -> tuple[list[Optional[int]], list[int]] | None:
    """Pick for each set a parent ``A - {x}`` in the system with all x distinct.

    Singletons are their own element and have no parent. Backtracks over the
    choice of x. Returns (parent, element) lists indexed by set.
    """
    n = len(masks)
    index = {m: i for i, m in enumerate(masks)}
    element: list[int] = [-1] * n
    parent: list[Optional[int]] = [None] * n
    used = 0
    pending = []
    for i, m in enumerate(masks):
        if popcount(m) == 1:
            e = members_of(m)[0]
            if used >> e & 1:
                return None
            used |= 1 << e
            element[i] = e
        else:
            options = [(x, index[m & ~(1 << x)]) for x in members_of(m) if m & ~(1 << x) in index]
            if not options:
                return None
            pending.append((i, options))
    pending.sort(key=lambda item: len(item[1]))

    def rec(k: int, used: int) -> bool:
        if k == len(pending):
            return True
        i, options = pending[k]
        for x, j in options:
            if not used >> x & 1:
                element[i], parent[i] = x, j
                if rec(k + 1, used | 1 << x):
                    return True
        element[i], parent[i] = -1, None
        return False

    if not rec(0, used):
        return None
    return parent, element


def realises(sys: SetSystem, D: Digraph, matching) -> bool:
    """B(D), with T-vertex j renamed to the element matched to set j, equals B(sys)."""
    perm = dict(matching)
    return digraph_to_bipartite(D).relabel_t(perm).edges == incidence_bipartite(sys).edges


def extremal_witness(sys: SetSystem) -> Extremal | NotExtremal:
    """A family digraph realising an extremal system, or a good element."""
    _require_square(sys)
    x = good_element(sys)
    if x is not None:
        return NotExtremal(x)
    n = len(sys)
    assigned = _assign_parents(sys.masks)
    if assigned is not None:
        parent, element = assigned
        forest = RootedForest(n, tuple(parent))
        D = forest.closure()
        matching = tuple(enumerate(element))
        if recognize_family(D) == forest and realises(sys, D, matching):
            return Extremal(D, forest, matching)
    if n <= MAX_FALLBACK_MATCHING_SIZE:
        G = incidence_bipartite(sys)
        for matching in all_perfect_matchings(G):
            D = bipartite_to_digraph(G.with_matching(matching))
            forest = recognize_family(D)
            if forest is not None and realises(sys, D, matching):
                return Extremal(D, forest, matching)
    raise ConstructionFailed("extremal system could not be realised as a family digraph")

