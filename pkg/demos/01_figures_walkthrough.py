"""
Four small permutation graphs
=============================

Builds the four example graphs shipped in ``permcm.fixtures`` and runs every
decision procedure on them: permutation recognition, well-coveredness,
maximal-clique partitions and the Cohen-Macaulay verdict.
"""

from permcm import fixtures
from permcm.cm import clique_partitions, is_cm_permutation
from permcm.graph import is_well_covered
from permcm.homology import oracle_is_cm_graph
from permcm.perm import perm_graph, perm_graph_id, recognize_permutation_graph

# A permutation graph is read off two line orders: i and j are adjacent when
# their segments cross.
g1 = perm_graph(fixtures.FIG1_REALIZER)
print("fig1 edges:", g1.edges)

# With the identity as first order, crossings are just inversions of pi.
g3 = perm_graph_id(fixtures.FIG3_PI)
print("fig3 edges:", g3.edges)

# fig3 is well-covered but has two different maximal-clique partitions,
# so it is not Cohen-Macaulay.
wc = is_well_covered(g3)
print("fig3 well-covered:", wc.well_covered, "r =", wc.r)
for part in clique_partitions(g3, wc.r, limit=None):
    print("  partition:", part)
print("fig3 verdict:", is_cm_permutation(g3).to_dict())

# fig1 and fig4 each have a unique partition.
for name in ("fig1", "fig4"):
    v = is_cm_permutation(fixtures.load(name))
    print(f"{name} verdict:", v.to_dict())

# fig5 is bipartite and Cohen-Macaulay, yet not a permutation graph: its
# complement has no transitive orientation. Only the homological oracle
# can speak about it.
g5 = fixtures.load("fig5")
print("fig5 recognition:", recognize_permutation_graph(g5).outcome)
print("fig5 Reisner over F2 and Q:", oracle_is_cm_graph(g5, ["F2", "Q"]))
