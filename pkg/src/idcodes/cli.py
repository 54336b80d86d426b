"""Command line interface.

Exit status: 0 on success, 1 when a verification sweep finds failures, 2 on
usage, format or precondition errors. Digraph vertices are printed 0-indexed;
set-system elements are printed with 1-indexed labels in text output (JSON
output stays 0-indexed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .bipartite import HallViolator, perfect_matching
from .bondy import (
    Extremal,
    bipartite_to_digraph,
    bondy_element,
    bondy_reduce,
    bondy_reduce_nonempty,
    digraph_to_bipartite,
    extremal_witness,
    incidence_bipartite,
    is_extremal_characterized,
    is_extremal_direct,
)
from .codes import check_code, min_identifying_code, min_separating_code
from .errors import FormatError, PreconditionError
from .family import recognize_family
from .harness import THEOREM_IDS, verify


def _label(e: int) -> int:
    return e + 1


def _braces(items) -> str:
    return "{" + ",".join(str(i) for i in items) + "}"


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_min_code(args) -> int:
    D = io.read_digraph(args.file)
    if args.command == "min-id":
        size, code = min_identifying_code(D)
        name = "gamma_id"
    else:
        size, code = min_separating_code(D)
        name = "gamma_s"
    _emit(args, {name: size, "code": list(code.members)}, f"{name} = {size}; code = {code}")
    return 0


def _parse_code(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise FormatError(f"bad --code value {text!r}") from None


def cmd_check_code(args) -> int:
    D = io.read_digraph(args.file)
    report = check_code(D, _parse_code(args.code))
    data = {
        "dominating": report.dominating,
        "undominated_witness": report.undominated_witness,
        "separating": report.separating,
        "unseparated_witness": report.unseparated_witness,
        "identifying": report.identifying,
    }
    parts = [f"dominating: {'yes' if report.dominating else f'no (vertex {report.undominated_witness})'}"]
    if report.separating:
        parts.append("separating: yes")
    else:
        u, v = report.unseparated_witness
        parts.append(f"separating: no (vertices {u},{v})")
    parts.append(f"identifying: {'yes' if report.identifying else 'no'}")
    _emit(args, data, "; ".join(parts))
    return 0


def cmd_check_family(args) -> int:
    D = io.read_digraph(args.file)
    forest = recognize_family(D)
    if forest is None:
        _emit(args, {"in_family": False}, "not in family")
        return 0
    data = {"in_family": True, "parent": list(forest.parent), "roots": forest.roots}
    text = f"in family; roots {_braces(forest.roots)}"
    if args.emit_forest:
        data["forest"] = io.serialize_forest(forest)
        text += "\n" + io.serialize_forest(forest).rstrip("\n")
    _emit(args, data, text)
    return 0


def cmd_bondy(args) -> int:
    sys_ = io.read_system(args.file)
    if args.action == "element":
        x = bondy_element(sys_)
        _emit(args, {"element": x}, f"element {_label(x)}")
        return 0
    removed = sorted(bondy_reduce(sys_) if args.action == "reduce" else bondy_reduce_nonempty(sys_))
    _emit(args, {"removed": removed}, f"removed {_braces(map(_label, removed))}")
    return 0


def cmd_extremal(args) -> int:
    sys_ = io.read_system(args.file)
    if args.action == "check":
        direct = is_extremal_direct(sys_)
        characterized = is_extremal_characterized(sys_)
        data = {
            "extremal": direct.extremal,
            "witness_element": direct.element,
            "characterized": characterized.extremal,
        }
        text = "extremal" if direct.extremal else f"not extremal; witness element {_label(direct.element)}"
        _emit(args, data, text)
        return 0
    result = extremal_witness(sys_)
    if not isinstance(result, Extremal):
        _emit(
            args,
            {"extremal": False, "witness_element": result.element},
            f"not extremal; witness element {_label(result.element)}",
        )
        return 0
    data = {
        "extremal": True,
        "digraph": io.serialize_digraph(result.digraph),
        "parent": list(result.forest.parent),
        "matching": [list(p) for p in result.matching],
    }
    pairs = ", ".join(f"{s}->{_label(e)}" for s, e in result.matching)
    text = f"extremal; matching (set -> element) {pairs}\n" + io.serialize_digraph(result.digraph).rstrip("\n")
    _emit(args, data, text)
    return 0


def cmd_convert(args) -> int:
    if args.direction == "d2b":
        G = digraph_to_bipartite(io.read_digraph(args.file))
        _emit(args, json.loads(io.bipartite_to_json(G)), io.bipartite_to_json(G))
        return 0
    if args.direction == "sys2b":
        G = incidence_bipartite(io.read_system(args.file))
        _emit(args, json.loads(io.bipartite_to_json(G)), io.bipartite_to_json(G))
        return 0
    G = io.read_bipartite(args.file)
    if G.matching is None:
        found = perfect_matching(G)
        if isinstance(found, HallViolator):
            raise PreconditionError(
                f"no perfect matching: S-vertices {sorted(found.subset)} see only {sorted(found.neighbourhood)}"
            )
        G = G.with_matching(found)
    D = bipartite_to_digraph(G)
    text = io.serialize_digraph(D)
    _emit(args, {"digraph": text, "matching": [list(p) for p in G.matching]}, text.rstrip("\n"))
    return 0


def cmd_verify(args) -> int:
    report = verify(
        args.theorem_id,
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        mode=args.mode,
    )
    if args.json:
        print(report.to_json())
    else:
        print(report.summary())
        for f in report.failures[:20]:
            print(f"  {f.index}: expected {f.expected}; got {f.actual}")
    return 0 if report.passed else 1


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("IDCODE_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="idcode", description="Identifying codes and Bondy set systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("min-id", "min-sep"):
        p = sub.add_parser(name, parents=[common], help=f"exact {name[4:]} code of a digraph")
        p.add_argument("file")
        p.set_defaults(func=cmd_min_code)

    p = sub.add_parser("check-code", parents=[common], help="check a vertex set against a digraph")
    p.add_argument("file")
    p.add_argument("--code", required=True, help="comma-separated vertices")
    p.set_defaults(func=cmd_check_code)

    p = sub.add_parser("check-family", parents=[common], help="recognise transitive closures of rooted forests")
    p.add_argument("file")
    p.add_argument("--emit-forest", action="store_true")
    p.set_defaults(func=cmd_check_family)

    p = sub.add_parser("bondy", parents=[common], help="distinguishing elements of a set system")
    p.add_argument("action", choices=["element", "reduce", "reduce-nonempty"])
    p.add_argument("file")
    p.set_defaults(func=cmd_bondy)

    p = sub.add_parser("extremal", parents=[common], help="extremal set systems")
    p.add_argument("action", choices=["check", "witness"])
    p.add_argument("file")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("convert", parents=[common], help="digraph / bipartite / set-system conversions")
    p.add_argument("direction", choices=["d2b", "b2d", "sys2b"])
    p.add_argument("file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run a theorem sweep")
    p.add_argument("theorem_id", choices=THEOREM_IDS)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--mode", choices=["all", "oriented"], default="all", help="digraph sweeps only")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FormatError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
