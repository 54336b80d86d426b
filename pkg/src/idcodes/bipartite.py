"""Bipartite graphs with parts S and T, perfect matchings and Hall violators."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .digraph import members_of, popcount
from .errors import PreconditionError

Matching = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BipartiteGraph:
    s_size: int
    t_size: int
    edges: frozenset = field(default_factory=frozenset)
    matching: Matching | None = None

    def __post_init__(self):
        edges = frozenset((int(s), int(t)) for s, t in self.edges)
        for s, t in edges:
            if not (0 <= s < self.s_size and 0 <= t < self.t_size):
                raise PreconditionError(f"edge ({s}, {t}) out of range")
        object.__setattr__(self, "edges", edges)
        if self.matching is not None:
            matching = tuple(sorted((int(s), int(t)) for s, t in self.matching))
            if len({s for s, _ in matching}) != len(matching) or len({t for _, t in matching}) != len(matching):
                raise PreconditionError("matching pairs must be disjoint")
            for pair in matching:
                if pair not in edges:
                    raise PreconditionError(f"matching pair {pair} is not an edge")
            object.__setattr__(self, "matching", matching)

    @cached_property
    def s_masks(self) -> tuple[int, ...]:
        """Neighbourhood in T of each S-vertex, as a bitmask over T."""
        masks = [0] * self.s_size
        for s, t in self.edges:
            masks[s] |= 1 << t
        return tuple(masks)

    @cached_property
    def t_masks(self) -> tuple[int, ...]:
        masks = [0] * self.t_size
        for s, t in self.edges:
            masks[t] |= 1 << s
        return tuple(masks)

    @property
    def has_perfect_matching(self) -> bool:
        return (
            self.matching is not None
            and self.s_size == self.t_size
            and len(self.matching) == self.s_size
        )

    def with_matching(self, matching) -> "BipartiteGraph":
        return BipartiteGraph(self.s_size, self.t_size, self.edges, tuple(matching))

    def relabel_t(self, perm) -> "BipartiteGraph":
        """Rename T-vertex ``t`` to ``perm[t]``."""
        edges = frozenset((s, perm[t]) for s, t in self.edges)
        matching = None if self.matching is None else tuple((s, perm[t]) for s, t in self.matching)
        return BipartiteGraph(self.s_size, self.t_size, edges, matching)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class HallViolator:
    """S-vertices whose joint neighbourhood is strictly smaller than themselves."""

    subset: frozenset
    neighbourhood: frozenset

    def __post_init__(self):
        assert len(self.neighbourhood) < len(self.subset)


def _augment(s: int, adj, match_t: list[int], seen: list[bool]) -> bool:
    for t in adj[s]:
        if seen[t]:
            continue
        seen[t] = True
        if match_t[t] < 0 or _augment(match_t[t], adj, match_t, seen):
            match_t[t] = s
            return True
    return False


def perfect_matching(G: BipartiteGraph) -> Matching | HallViolator:
    """Perfect matching by augmenting paths, else a Hall violator in S.

    S-vertices are processed in increasing order and each scans its
    T-neighbours in increasing order, so the result is deterministic.
    """
    if G.s_size != G.t_size:
        raise PreconditionError(f"parts differ in size: {G.s_size} != {G.t_size}")
    adj = [members_of(m) for m in G.s_masks]
    match_t = [-1] * G.t_size
    for s in range(G.s_size):
        seen = [False] * G.t_size
        if not _augment(s, adj, match_t, seen):
            # s and every S-vertex reachable from it by alternating paths
            reached_t = frozenset(t for t in range(G.t_size) if seen[t])
            subset = frozenset({s} | {match_t[t] for t in reached_t})
            nbhd = 0
            for x in subset:
                nbhd |= G.s_masks[x]
            return HallViolator(subset, frozenset(members_of(nbhd)))
    return tuple(sorted((s, t) for t, s in enumerate(match_t)))


def hall_deficient(G: BipartiteGraph, subset) -> bool:
    nbhd = 0
    for s in subset:
        nbhd |= G.s_masks[s]
    return popcount(nbhd) < len(subset)


def all_perfect_matchings(G: BipartiteGraph) -> Iterator[Matching]:
    """Every perfect matching, S-vertices assigned in order, T scanned ascending."""
    if G.s_size != G.t_size:
        raise PreconditionError(f"parts differ in size: {G.s_size} != {G.t_size}")
    adj = [members_of(m) for m in G.s_masks]
    chosen: list[int] = []

    def rec(s: int, used: int):
        if s == G.s_size:
            yield tuple(enumerate(chosen))
            return
        for t in adj[s]:
            if not used >> t & 1:
                chosen.append(t)
                yield from rec(s + 1, used | 1 << t)
                chosen.pop()

    yield from rec(0, 0)
