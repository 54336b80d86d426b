"""Finite loop-free digraphs over vertices ``0..n-1`` and bitmask vertex sets.

Vertex sets are plain Python ints internally (bit ``v`` set iff ``v`` is a
member); :class:`VertexSet` wraps one together with its universe size for the
public API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GuardExceeded, PreconditionError

ENUMERATION_GUARD = {"all": 5, "oriented": 5}


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(universe_size)``."""

    universe_size: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe_size:
            raise PreconditionError(
                f"members {members_of(self.bits)} not within universe of size {self.universe_size}"
            )

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int]) -> "VertexSet":
        members = list(members)
        for v in members:
            if not 0 <= v < universe_size:
                raise PreconditionError(f"vertex {v} out of range [0, {universe_size})")
        return cls(universe_size, mask_of(members))

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, (1 << universe_size) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def _coerce(self, other: "VertexSet") -> int:
        if other.universe_size != self.universe_size:
            raise PreconditionError("vertex sets over different universes")
        return other.bits

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe_size, self.bits & self._coerce(other))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe_size, self.bits | self._coerce(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe_size, self.bits & ~self._coerce(other))

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~self._coerce(other) == 0

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices ``0..n-1``.

    Symmetric pairs are allowed; use :attr:`is_oriented` to test for their
    absence.
    """

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """Closed in-ball of every vertex as a bitmask."""
        masks = [1 << v for v in range(self.n)]
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [1 << v for v in range(self.n)]
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    @property
    def is_oriented(self) -> bool:
        return not any((v, u) in self.arcs for u, v in self.arcs)

    def symmetric_pairs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.arcs if u < v and (v, u) in self.arcs)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def remove_vertices(self, removed: Iterable[int]) -> "Digraph":
        """Induced subgraph on the remaining vertices, relabelled in increasing order."""
        removed = set(removed)
        keep = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        arcs = {(index[u], index[v]) for u, v in self.arcs if u in index and v in index}
        return Digraph(len(keep), frozenset(arcs))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __str__(self) -> str:
        arcs = ", ".join(f"{u}->{v}" for u, v in self.sorted_arcs())
        return f"Digraph(n={self.n}, arcs=[{arcs}])"


def _check_vertex(D: Digraph, v: int) -> None:
    if not 0 <= v < D.n:
        raise PreconditionError(f"vertex {v} out of range [0, {D.n})")


def in_ball(D: Digraph, v: int) -> VertexSet:
    """``v`` together with the tails of all arcs entering ``v``."""
    _check_vertex(D, v)
    return VertexSet(D.n, D.in_masks[v])


def out_ball(D: Digraph, v: int) -> VertexSet:
    _check_vertex(D, v)
    return VertexSet(D.n, D.out_masks[v])


def find_twins(D: Digraph) -> tuple[int, int] | None:
    """Lexicographically smallest pair ``u < v`` with equal in-balls, if any."""
    masks = D.in_masks
    for u, v in combinations(range(D.n), 2):
        if masks[u] == masks[v]:
            return u, v
    return None


def is_twin_free(D: Digraph) -> bool:
    return len(set(D.in_masks)) == D.n


def sources(D: Digraph) -> VertexSet:
    bits = 0
    for v, m in enumerate(D.in_masks):
        if m == 1 << v:
            bits |= 1 << v
    return VertexSet(D.n, bits)


def reach_masks(D: Digraph) -> list[int]:
    """``reach[x]`` has bit ``y`` set iff a directed path of length >= 1 runs x to y."""
    n = D.n
    reach = [0] * n
    for u, v in D.arcs:
        reach[u] |= 1 << v
    for k in range(n):
        bit = 1 << k
        rk = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= rk
    return reach


def transitive_closure(D: Digraph) -> Digraph:
    arcs = set()
    for x, r in enumerate(reach_masks(D)):
        for y in members_of(r):
            if y != x:
                arcs.add((x, y))
    return Digraph(D.n, frozenset(arcs))


def is_acyclic(D: Digraph) -> bool:
    return all(not (r >> x & 1) for x, r in enumerate(reach_masks(D)))


# Small named digraphs used throughout tests and scripts.


def edgeless(n: int) -> Digraph:
    return Digraph(n)


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def chain_tc(n: int) -> Digraph:
    """Transitive closure of the directed path ``0 -> 1 -> ... -> n-1``."""
    return Digraph(n, frozenset(combinations(range(n), 2)))


# Enumeration. Pairs (i, j), i < j, are taken in lexicographic order; pair k is
# digit k of the index (least significant first). Digits: 0 none, 1 i->j,
# 2 j->i, 3 both (the last only in "all" mode).

_BASE = {"all": 4, "oriented": 3}


def _check_mode(n: int, mode: str) -> int:
    if mode not in _BASE:
        raise PreconditionError(f"unknown enumeration mode {mode!r}")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n > ENUMERATION_GUARD[mode]:
        raise GuardExceeded(f"enumeration of {mode} digraphs limited to n <= {ENUMERATION_GUARD[mode]}")
    return _BASE[mode]


def count_digraphs(n: int, mode: str = "all") -> int:
    base = _check_mode(n, mode)
    return base ** (n * (n - 1) // 2)


def digraph_from_index(n: int, index: int, mode: str = "all") -> Digraph:
    base = _check_mode(n, mode)
    pairs = list(combinations(range(n), 2))
    if not 0 <= index < base ** len(pairs):
        raise PreconditionError(f"index {index} out of range")
    arcs = []
    for i, j in pairs:
        index, d = divmod(index, base)
        if d & 1:
            arcs.append((i, j))
        if d & 2:
            arcs.append((j, i))
    return Digraph(n, frozenset(arcs))


def enumerate_digraphs(
    n: int, mode: str = "all", filter: str | None = None, start: int = 0, stop: int | None = None
) -> Iterator[Digraph]:
    """Yield labelled digraphs on ``n`` vertices in index order.

    ``filter="twin_free"`` drops digraphs with twins. ``start``/``stop``
    restrict to an index range so sweeps can be split across workers.
    """
    if filter not in (None, "none", "twin_free"):
        raise PreconditionError(f"unknown filter {filter!r}")
    total = count_digraphs(n, mode)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        D = digraph_from_index(n, index, mode)
        if filter == "twin_free" and not is_twin_free(D):
            continue
        yield D
