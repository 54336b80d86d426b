"""Exhaustive and seeded-random sweeps that check the theorems on small instances.

Each sweep walks a deterministic instance stream (labelled digraphs by index,
set systems by combination rank, or seeded random samples), applies a
per-instance check and collects failures. Streams are cut into contiguous
index chunks; chunks may run in worker processes and are merged in order, so
the report never depends on the worker count.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, islice
from math import comb
from typing import Callable

from .bondy import (
    Extremal,
    SetSystem,
    realises,
    bondy_element,
    bondy_reduce_nonempty,
    extremal_witness,
    incidence_bipartite,
    is_extremal_characterized,
    is_extremal_direct,
)
from .codes import check_code, gamma_id, gamma_s
from .digraph import Digraph, count_digraphs, digraph_from_index, is_twin_free, mask_of, members_of
from .errors import GuardExceeded, NoElement, PreconditionError
from .family import family_separation_witness, recognize_family
from .io import serialize_digraph, system_to_json

DIGRAPH_GUARD = {"all": 4, "oriented": 5}
SYSTEM_GUARD = 5
PROP6_GUARD = 10
INDUCTION_GUARD = 6

# (applicable, failure) where failure is None or (expected, actual)
Outcome = tuple[bool, "tuple[str, str] | None"]


@dataclass(frozen=True)
class FailureRecord:
    index: str
    instance: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    theorem_id: str
    params: dict
    instances_checked: int = 0
    applicable: int = 0
    per_n: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        """Everything except timing, so equal parameters give equal output."""
        return {
            "theorem_id": self.theorem_id,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "applicable": self.applicable,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "failures": [asdict(f) for f in self.failures],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        sizes = ", ".join(f"n={k}: {v}" for k, v in sorted(self.per_n.items()))
        return (
            f"{status} {self.theorem_id}: {self.instances_checked} instances "
            f"({self.applicable} applicable; {sizes}), {len(self.failures)} failures, "
            f"{self.elapsed:.2f}s"
        )


# Per-instance checks


def _fail(expected: str, actual: str) -> Outcome:
    return True, (expected, actual)


def check_gamma_bounds(D: Digraph) -> Outcome:
    if not is_twin_free(D):
        return False, None
    n, gs, gi = D.n, gamma_s(D), gamma_id(D)
    if gs <= n - 1 and gs <= gi <= gs + 1:
        return True, None
    return _fail("gamma_s <= n-1 and gamma_s <= gamma_id <= gamma_s+1", f"n={n} gamma_s={gs} gamma_id={gi}")


def check_extremal_digraph(D: Digraph) -> Outcome:
    if not is_twin_free(D):
        return False, None
    gi = gamma_id(D)
    forest = recognize_family(D)
    if (gi == D.n) != (forest is not None):
        return _fail(
            "gamma_id == n iff recognized",
            f"n={D.n} gamma_id={gi} recognized={forest is not None}",
        )
    if forest is not None:
        closure = forest.closure()
        if closure != D or recognize_family(closure) != forest:
            return _fail("closure of forest round-trips", f"parent={forest.parent}")
        for x in range(D.n):
            try:
                family_separation_witness(D, x)
            except AssertionError as exc:
                return _fail("separation witness holds", str(exc))
    return True, None


def check_prop4(D: Digraph) -> Outcome:
    if not is_twin_free(D):
        return False, None
    n = D.n
    full = (1 << n) - 1
    lhs = gamma_id(D) == n
    gs = gamma_s(D)
    all_undominated = True
    for x in range(n):
        report = check_code(D, members_of(full & ~(1 << x)))
        if report.separating and report.dominating:
            all_undominated = False
    rhs = gs == n - 1 and all_undominated
    if lhs == rhs:
        return True, None
    return _fail(
        "gamma_id == n iff (gamma_s == n-1 and every size n-1 separating code misses domination)",
        f"lhs={lhs} gamma_s={gs} all_undominated={all_undominated}",
    )


def check_symmetric_arc(D: Digraph) -> Outcome:
    if not is_twin_free(D) or D.is_oriented:
        return False, None
    gi = gamma_id(D)
    if gi <= D.n - 1:
        return True, None
    return _fail("gamma_id <= n-1", f"n={D.n} gamma_id={gi}")


def check_bondy(sys: SetSystem) -> Outcome:
    try:
        x = bondy_element(sys)
    except NoElement:
        return _fail("some element keeps the sets distinct", "NoElement")
    traces = sys.traces(1 << x)
    if len(set(traces)) != len(traces):
        return _fail("traces distinct", f"element {x} gives traces {traces}")
    return True, None


def check_extremal_system(sys: SetSystem) -> Outcome:
    direct = is_extremal_direct(sys).extremal
    characterized = is_extremal_characterized(sys).extremal
    witness = extremal_witness(sys)
    constructed = isinstance(witness, Extremal)
    if not direct == characterized == constructed:
        return _fail(
            "direct == characterized == witness",
            f"direct={direct} characterized={characterized} witness={constructed}",
        )
    if constructed:
        if recognize_family(witness.digraph) != witness.forest:
            return _fail("witness digraph in family", serialize_digraph(witness.digraph))
        matched = incidence_bipartite(sys).with_matching(witness.matching)
        if not matched.has_perfect_matching or not realises(sys, witness.digraph, witness.matching):
            return _fail("witness realises the incidence graph", str(witness.matching))
    return True, None


def check_prop6(sys: SetSystem) -> Outcome:
    removed = bondy_reduce_nonempty(sys)
    traces = sys.traces(mask_of(removed))
    want = sys.ground_size - len(sys)
    if len(removed) == want and len(set(traces)) == len(traces) and all(traces):
        return True, None
    return _fail(f"|X'|={want}, traces nonempty and distinct", f"X'={sorted(removed)} traces={traces}")


def check_induction(instance: tuple[Digraph, frozenset]) -> Outcome:
    D, S = instance
    rest = D.remove_vertices(S)
    lhs, rhs = gamma_id(D), gamma_id(rest) + len(S)
    if lhs <= rhs:
        return True, None
    return _fail("gamma_id(D) <= gamma_id(D-S) + |S|", f"{lhs} > {rhs}")


# Instance streams


def _system_masks(n: int, nonempty: bool) -> range:
    return range(1 if nonempty else 0, 1 << n)


def count_systems(n: int, nonempty: bool) -> int:
    return comb(len(_system_masks(n, nonempty)), n)


def systems(n: int, nonempty: bool, start: int = 0, stop: int | None = None):
    """Systems of n distinct subsets of an n-set, in combination order."""
    for masks in islice(combinations(_system_masks(n, nonempty), n), start, stop):
        yield SetSystem.from_masks(n, masks)


def random_prop6_system(seed: int, i: int, max_m: int) -> SetSystem:
    rng = random.Random(f"prop6:{seed}:{i}")
    m = rng.randint(2, max_m)
    k = rng.randint(1, m - 1)
    return SetSystem.from_masks(m, rng.sample(range(1, 1 << m), k))


def random_induction_pair(seed: int, i: int, max_n: int) -> tuple[Digraph, frozenset]:
    rng = random.Random(f"induction-bound:{seed}:{i}")
    while True:
        n = rng.randint(1, max_n)
        arcs = []
        for u, v in combinations(range(n), 2):
            d = rng.randrange(4)
            if d & 1:
                arcs.append((u, v))
            if d & 2:
                arcs.append((v, u))
        D = Digraph(n, frozenset(arcs))
        if not is_twin_free(D):
            continue
        for _ in range(20):
            S = frozenset(members_of(rng.getrandbits(n)))
            if is_twin_free(D.remove_vertices(S)):
                return D, S


@dataclass(frozen=True)
class Sweep:
    kind: str  # "digraphs", "systems" or "random"
    check: Callable
    default_max_n: int
    nonempty: bool = True


SWEEPS: dict[str, Sweep] = {
    "gamma-bounds": Sweep("digraphs", check_gamma_bounds, 4),
    "extremal-digraphs": Sweep("digraphs", check_extremal_digraph, 4),
    "prop4": Sweep("digraphs", check_prop4, 4),
    "symmetric-arc": Sweep("digraphs", check_symmetric_arc, 4),
    "bondy": Sweep("systems", check_bondy, 4, nonempty=False),
    "extremal-systems": Sweep("systems", check_extremal_system, 5),
    "prop6": Sweep("random", check_prop6, PROP6_GUARD),
    "induction-bound": Sweep("random", check_induction, INDUCTION_GUARD),
}

THEOREM_IDS = tuple(SWEEPS)

_CHUNK = {"digraphs": 2048, "systems": 8192, "random": 100}


def _serialize(theorem_id: str, instance) -> str:
    if isinstance(instance, Digraph):
        return serialize_digraph(instance)
    if isinstance(instance, SetSystem):
        return system_to_json(instance)
    D, S = instance
    return serialize_digraph(D) + f"# S = {sorted(S)}\n"


def _size(instance) -> int:
    if isinstance(instance, Digraph):
        return instance.n
    if isinstance(instance, SetSystem):
        return instance.ground_size
    return instance[0].n


def _instances(theorem_id: str, params: dict, n: int, lo: int, hi: int):
    """Yield (index label, instance) for one chunk."""
    sweep = SWEEPS[theorem_id]
    if sweep.kind == "digraphs":
        for i in range(lo, hi):
            yield f"n={n}:{i}", digraph_from_index(n, i, params["mode"])
    elif sweep.kind == "systems":
        for i, sys in enumerate(systems(n, sweep.nonempty, lo, hi), start=lo):
            yield f"n={n}:{i}", sys
    elif theorem_id == "prop6":
        for i in range(lo, hi):
            yield f"sample={i}", random_prop6_system(params["seed"], i, params["max_n"])
    else:
        for i in range(lo, hi):
            yield f"sample={i}", random_induction_pair(params["seed"], i, params["max_n"])


def instance_at(theorem_id: str, index: str, params: dict):
    """Rebuild the instance named by a failure record's index label."""
    if index.startswith("sample="):
        i = int(index.split("=")[1])
        n = 0
    else:
        head, i = index.split(":")
        n, i = int(head.split("=")[1]), int(i)
    return next(_instances(theorem_id, params, n, i, i + 1))[1]


def _run_chunk(task) -> tuple[int, int, dict, list]:
    theorem_id, params, n, lo, hi = task
    check = SWEEPS[theorem_id].check
    checked = applicable = 0
    per_n: dict[int, int] = {}
    failures = []
    for label, instance in _instances(theorem_id, params, n, lo, hi):
        checked += 1
        size = _size(instance)
        per_n[size] = per_n.get(size, 0) + 1
        try:
            ok_applicable, failure = check(instance)
        except Exception as exc:  # a crash on an instance is a failure, not an abort
            ok_applicable, failure = True, ("no exception", f"{type(exc).__name__}: {exc}")
        applicable += ok_applicable
        if failure is not None:
            failures.append(FailureRecord(label, _serialize(theorem_id, instance), *failure))
    return checked, applicable, per_n, failures


def _tasks(theorem_id: str, params: dict) -> list:
    sweep = SWEEPS[theorem_id]
    chunk = _CHUNK[sweep.kind]
    tasks = []
    if sweep.kind == "random":
        total = params["samples"]
        return [(theorem_id, params, 0, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    for n in range(1, params["max_n"] + 1):
        if sweep.kind == "digraphs":
            total = count_digraphs(n, params["mode"])
        else:
            total = count_systems(n, sweep.nonempty)
        tasks += [(theorem_id, params, n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    return tasks


def verify(
    theorem_id: str,
    max_n: int | None = None,
    samples: int = 1000,
    seed: int = 1,
    workers: int = 1,
    mode: str = "all",
) -> VerifyReport:
    if theorem_id not in SWEEPS:
        raise PreconditionError(f"unknown theorem id {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}")
    sweep = SWEEPS[theorem_id]
    max_n = sweep.default_max_n if max_n is None else max_n
    if max_n < 1:
        raise PreconditionError("max_n must be at least 1")
    if sweep.kind == "digraphs":
        if mode not in DIGRAPH_GUARD:
            raise PreconditionError(f"unknown mode {mode!r}")
        limit = DIGRAPH_GUARD[mode]
    elif sweep.kind == "systems":
        limit = SYSTEM_GUARD
    else:
        limit = PROP6_GUARD if theorem_id == "prop6" else INDUCTION_GUARD
        if theorem_id == "prop6" and max_n < 2:
            raise PreconditionError("prop6 needs max_n >= 2")
    if max_n > limit:
        raise GuardExceeded(f"{theorem_id} is limited to max_n <= {limit}")
    if samples < 0 or workers < 1:
        raise PreconditionError("samples must be >= 0 and workers >= 1")

    params = {"max_n": max_n}
    if sweep.kind == "digraphs":
        params["mode"] = mode
    if sweep.kind == "random":
        params.update(samples=samples, seed=seed)
    report = VerifyReport(theorem_id, params)

    start = time.perf_counter()
    tasks = _tasks(theorem_id, params)
    if workers == 1 or len(tasks) <= 1:
        results = map(_run_chunk, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run_chunk, tasks)
    try:
        for checked, applicable, per_n, failures in results:
            report.instances_checked += checked
            report.applicable += applicable
            for k, v in per_n.items():
                report.per_n[k] = report.per_n.get(k, 0) + v
            report.failures.extend(failures)
    finally:
        if workers > 1 and len(tasks) > 1:
            pool.shutdown()
    report.elapsed = time.perf_counter() - start
    return report


def recheck(theorem_id: str, record: FailureRecord, params: dict) -> Outcome:
    """Run one failing instance again through the library calls."""
    return SWEEPS[theorem_id].check(instance_at(theorem_id, record.index, params))
