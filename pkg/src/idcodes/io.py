"""Text and JSON formats.

Digraph text::

    # comment
    n 3
    0 1
    1 2

Forest text: the same ``n <count>`` header, then one ``<child> <parent>``
line per non-root vertex.

Set systems and bipartite graphs are JSON objects, elements 0-indexed::

    {"ground_size": 4, "sets": [[0], [0, 2]]}
    {"s_size": 2, "t_size": 2, "edges": [[0, 0], [1, 1]], "matching": [[0, 0], [1, 1]]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .bipartite import BipartiteGraph
from .bondy import SetSystem
from .digraph import Digraph
from .errors import FormatError, PreconditionError
from .family import RootedForest


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", lineno) from None


def _header(lines) -> int:
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatError("missing 'n <count>' header") from None
    if len(tokens) != 2 or tokens[0] != "n":
        raise FormatError("expected 'n <count>' header", lineno)
    n = _int(tokens[1], lineno)
    if n < 0:
        raise FormatError("vertex count must be nonnegative", lineno)
    return n


def _pairs(lines, n: int):
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise FormatError("expected two vertex indices", lineno)
        u, v = (_int(t, lineno) for t in tokens)
        for x in (u, v):
            if not 0 <= x < n:
                raise FormatError(f"vertex {x} out of range [0, {n})", lineno)
        yield lineno, u, v


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    n = _header(lines)
    arcs = set()
    for lineno, u, v in _pairs(lines, n):
        if u == v:
            raise FormatError(f"self-loop on vertex {u}", lineno)
        if (u, v) in arcs:
            raise FormatError(f"duplicate arc {u} {v}", lineno)
        arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def serialize_digraph(D: Digraph) -> str:
    return "".join([f"n {D.n}\n"] + [f"{u} {v}\n" for u, v in D.sorted_arcs()])


def parse_forest(text: str) -> RootedForest:
    lines = _content_lines(text)
    n = _header(lines)
    parent: list = [None] * n
    for lineno, child, p in _pairs(lines, n):
        if parent[child] is not None:
            raise FormatError(f"vertex {child} given two parents", lineno)
        parent[child] = p
    try:
        return RootedForest(n, tuple(parent))
    except PreconditionError as exc:
        raise FormatError(str(exc)) from None


def serialize_forest(F: RootedForest) -> str:
    lines = [f"n {F.n}\n"]
    lines += [f"{c} {p}\n" for c, p in enumerate(F.parent) if p is not None]
    return "".join(lines)


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict):
        raise FormatError("expected a JSON object")
    return data


def _int_field(data: dict, key: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise FormatError(f"field {key!r} must be a nonnegative integer")
    return value


def _pair_list(data: dict, key: str) -> list[tuple[int, int]]:
    value = data.get(key)
    if not isinstance(value, list):
        raise FormatError(f"field {key!r} must be a list of pairs")
    out = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise FormatError(f"field {key!r}: bad pair {item!r}")
        out.append((item[0], item[1]))
    return out


def system_from_json(text: str) -> SetSystem:
    data = _load_json(text)
    m = _int_field(data, "ground_size")
    sets = data.get("sets")
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise FormatError("field 'sets' must be a list of lists")
    for i, s in enumerate(sets):
        if not all(isinstance(e, int) and not isinstance(e, bool) for e in s):
            raise FormatError(f"set {i}: elements must be integers")
        if len(set(s)) != len(s):
            raise FormatError(f"set {i}: repeated element")
    try:
        return SetSystem(m, tuple(frozenset(s) for s in sets))
    except PreconditionError as exc:
        raise FormatError(str(exc)) from None


def system_to_json(sys: SetSystem) -> str:
    return json.dumps({"ground_size": sys.ground_size, "sets": [sorted(s) for s in sys.sets]})


def bipartite_from_json(text: str) -> BipartiteGraph:
    data = _load_json(text)
    s_size = _int_field(data, "s_size")
    t_size = _int_field(data, "t_size")
    edges = _pair_list(data, "edges")
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    matching = _pair_list(data, "matching") if "matching" in data else None
    try:
        return BipartiteGraph(s_size, t_size, frozenset(edges), None if matching is None else tuple(matching))
    except PreconditionError as exc:
        raise FormatError(str(exc)) from None


def bipartite_to_json(G: BipartiteGraph) -> str:
    data = {
        "s_size": G.s_size,
        "t_size": G.t_size,
        "edges": [list(e) for e in G.sorted_edges()],
    }
    if G.matching is not None:
        data["matching"] = [list(p) for p in G.matching]
    return json.dumps(data)


def read_digraph(path) -> Digraph:
    return parse_digraph(Path(path).read_text())


def read_system(path) -> SetSystem:
    return system_from_json(Path(path).read_text())


def read_bipartite(path) -> BipartiteGraph:
    return bipartite_from_json(Path(path).read_text())
