"""
Uniquely partially orderable graphs
===================================

A comparability graph is UPO when its transitive orientations are exactly
one poset and its dual. For connected graphs that is equivalent to every
nontrivial module being independent, which is what ``is_upo`` checks.
"""

from permcm import fixtures
from permcm.graph import complement, complete_graph, cycle_graph, path_graph
from permcm.perm import count_transitive_orientations
from permcm.poset import comparability_graph, poset_from_relation
from permcm.upo import is_upo, thm12_hypotheses, upo_orientation_oracle

for name, g in [("P4", path_graph(4)), ("C4", cycle_graph(4)), ("K3", complete_graph(3))]:
    v = is_upo(g)
    print(f"{name}: upo={v.upo} violator={v.violator} "
          f"orientations={count_transitive_orientations(g)}")

# A pure poset with connected level pairs that is not an ordinal sum.
p = poset_from_relation(4, [(1, 3), (1, 4), (2, 4)])
print("N poset hypotheses:", thm12_hypotheses(p), "->", is_upo(comparability_graph(p)).upo)

# The complement of the fig3 graph is the comparability graph of two
# disjoint cherries. Each can be flipped on its own, so there are four
# orientations and the graph is not UPO.
h = complement(fixtures.load("fig3"))
print("complement of fig3:", h.edges)
print("  orientations:", count_transitive_orientations(h))
print("  is_upo:", is_upo(h).to_dict(), " oracle:", upo_orientation_oracle(h))
