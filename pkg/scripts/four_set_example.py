"""Walk the four-set example through matching, conversion and extremality checks."""

from idcodes import (
    SetSystem,
    bipartite_to_digraph,
    bondy_element,
    extremal_witness,
    incidence_bipartite,
    is_extremal_characterized,
    min_discriminating_code,
    perfect_matching,
    recognize_family,
)

# element labels 1..4 in the printout, 0..3 internally
sys_ = SetSystem(4, [{0}, {0, 2}, {1, 2}, {0, 2, 3}])
G = incidence_bipartite(sys_)
matching = perfect_matching(G)
label = {s: e + 1 for s, e in matching}
D = bipartite_to_digraph(G.with_matching(matching))

print("matching:", ", ".join(f"{sorted(e + 1 for e in sys_.sets[s])}-{e + 1}" for s, e in matching))
print("arcs:", ", ".join(f"e{label[u]}->e{label[v]}" for u, v in sorted(D.arcs)))
print("in family:", recognize_family(D) is not None)
print("bondy element:", bondy_element(sys_) + 1)
print("good element (extremal witness):", extremal_witness(sys_).element + 1)
print("characterized check:", is_extremal_characterized(sys_))
size, code = min_discriminating_code(G)
print("min discriminating code:", size, sorted(e + 1 for e in code))
