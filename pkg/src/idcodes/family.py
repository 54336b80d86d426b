"""The family built from K1 by disjoint union and apex addition.

Its members are exactly the transitive closures of rooted oriented forests,
and exactly the finite twin-free digraphs whose only identifying code is the
whole vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .codes import analyze, unseparated_pairs
from .digraph import Digraph, reach_masks, transitive_closure
from .errors import NotInFamily, PreconditionError

K1 = Digraph(1)


@dataclass(frozen=True)
class RootedForest:
    """Parent map of a rooted oriented forest; ``None`` marks a root."""

    n: int
    parent: tuple[Optional[int], ...]

    def __post_init__(self):
        parent = tuple(self.parent)
        if len(parent) != self.n:
            raise PreconditionError("parent map must cover every vertex")
        for v, p in enumerate(parent):
            if p is not None and not (0 <= p < self.n and p != v):
                raise PreconditionError(f"bad parent {p} for vertex {v}")
        for v in range(self.n):
            seen = set()
            x: Optional[int] = v
            while x is not None:
                if x in seen:
                    raise PreconditionError(f"parent map has a cycle through {v}")
                seen.add(x)
                x = parent[x]
        object.__setattr__(self, "parent", parent)

    @property
    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    def father(self, v: int) -> Optional[int]:
        return self.parent[v]

    def ancestors(self, v: int) -> list[int]:
        out = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def children(self, v: int) -> list[int]:
        return [c for c, p in enumerate(self.parent) if p == v]

    def to_digraph(self) -> Digraph:
        """The forest itself, arcs oriented father to child."""
        return Digraph(self.n, frozenset((p, c) for c, p in enumerate(self.parent) if p is not None))

    def closure(self) -> Digraph:
        return transitive_closure(self.to_digraph())


def disjoint_union(D1: Digraph, D2: Digraph) -> Digraph:
    shift = D1.n
    arcs = set(D1.arcs) | {(u + shift, v + shift) for u, v in D2.arcs}
    return Digraph(D1.n + D2.n, frozenset(arcs))


def apex(D: Digraph) -> Digraph:
    """Add a new source dominating every vertex of D.

    The new vertex gets index 0 and old vertices shift up by one.
    """
    arcs = {(u + 1, v + 1) for u, v in D.arcs} | {(0, v + 1) for v in range(D.n)}
    return Digraph(D.n + 1, frozenset(arcs))


def recognize_family(D: Digraph) -> RootedForest | None:
    """Return the forest whose transitive closure is D, or None if D is not in the family."""
    n = D.n
    if not D.is_oriented:
        return None
    reach = reach_masks(D)
    if any(r >> x & 1 for x, r in enumerate(reach)):
        return None
    out = [m & ~(1 << v) for v, m in enumerate(D.out_masks)]
    if out != reach:
        return None  # not transitive
    in_nb = [m & ~(1 << v) for v, m in enumerate(D.in_masks)]
    parent: list[Optional[int]] = [None] * n
    for x in range(n):
        preds = in_nb[x]
        if not preds:
            continue
        # the father's in-ball must be exactly the in-neighbourhood of x
        father = None
        p, m = 0, preds
        while m:
            if m & 1 and D.in_masks[p] == preds:
                father = p
                break
            m >>= 1
            p += 1
        if father is None:
            return None
        parent[x] = father
    forest = RootedForest(n, tuple(parent))
    if forest.closure().arcs != D.arcs:
        return None
    return forest


@dataclass(frozen=True)
class SourceCase:
    vertex: int


@dataclass(frozen=True)
class FatherPair:
    vertex: int
    father: int


def family_separation_witness(D: Digraph, x: int) -> SourceCase | FatherPair:
    """Which pairs the code ``V(D) - x`` fails to separate in a family member.

    For a root of the forest the code is separating; otherwise x and its
    father are the one unseparated pair. Both outcomes are checked before
    returning.
    """
    forest = recognize_family(D)
    if forest is None:
        raise NotInFamily("digraph is not a transitive closure of a rooted oriented forest")
    if not 0 <= x < D.n:
        raise PreconditionError(f"vertex {x} out of range [0, {D.n})")
    code = ((1 << D.n) - 1) & ~(1 << x)
    father = forest.father(x)
    if father is None:
        report = analyze(D.in_masks, code)
        if not report.separating:
            raise AssertionError(f"V(D)-{x} fails to separate {report.unseparated_witness}")
        return SourceCase(x)
    pairs = unseparated_pairs(D.in_masks, code)
    if pairs != [tuple(sorted((x, father)))]:
        raise AssertionError(f"unexpected unseparated pairs {pairs} for V(D)-{x}")
    return FatherPair(x, father)
