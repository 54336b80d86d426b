"""Identifying codes on digraphs, their extremal family, and Bondy set systems."""

from .bipartite import BipartiteGraph, HallViolator, all_perfect_matchings, perfect_matching
from .bondy import (
    Extremal,
    ExtremalCheck,
    NotExtremal,
    SetSystem,
    bipartite_to_digraph,
    bondy_element,
    bondy_reduce,
    bondy_reduce_nonempty,
    digraph_to_bipartite,
    extremal_witness,
    incidence_bipartite,
    is_extremal_characterized,
    is_extremal_direct,
    system_from_digraph,
)
from .codes import (
    CodeReport,
    check_bipartite_code,
    check_code,
    gamma_id,
    gamma_s,
    min_discriminating_code,
    min_identifying_code,
    min_s_separating_code,
    min_separating_code,
)
from .digraph import (
    Digraph,
    VertexSet,
    chain_tc,
    directed_cycle,
    edgeless,
    enumerate_digraphs,
    find_twins,
    in_ball,
    out_ball,
    sources,
    transitive_closure,
)
from .errors import (
    ConstructionFailed,
    FormatError,
    GuardExceeded,
    NoElement,
    NotIdentifiable,
    NotInFamily,
    PreconditionError,
    TwinsExist,
)
from .family import K1, FatherPair, RootedForest, SourceCase, apex, disjoint_union, family_separation_witness, recognize_family
from .harness import VerifyReport, verify
