"""
Reduced homology and the Reisner test
=====================================

The independence complex of a graph is Cohen-Macaulay when every link has
vanishing reduced homology below its top dimension. This script computes
a few homology profiles and shows a field-dependent case.
"""

from permcm.graph import cycle_graph, path_graph
from permcm.homology import (SimplicialComplex, independence_complex, link,
                             reduced_homology_ranks, reisner_cm)

circle = SimplicialComplex(3, ((1, 2), (1, 3), (2, 3)))
print("hollow triangle:", reduced_homology_ranks(circle, "Q").ranks)

# C4's independence complex is two disjoint edges: H~_0 has rank 1, and the
# empty face already witnesses the failure.
c4 = independence_complex(cycle_graph(4))
print("I(C4) facets:", c4.facets)
print("I(C4) Reisner:", reisner_cm(c4, ["F2"]))

# C5 gives a 5-cycle of edges: a circle, hence Cohen-Macaulay.
c5 = independence_complex(cycle_graph(5))
print("I(C5) facets:", c5.facets, "->", reisner_cm(c5)[0])
print("link of vertex 1 in I(C5):", link(c5, (1,)).facets)

# P3 is not well-covered ({2} versus {1, 3}), so its complex is not pure.
p3 = independence_complex(path_graph(3))
print("I(P3) pure:", p3.is_pure(), "->", reisner_cm(p3)[0])

# The six-vertex projective plane has 2-torsion in H_1, which F2 sees and
# Q does not.
rp2 = SimplicialComplex.from_faces(6, [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5),
    (2, 4, 6), (3, 4, 6), (3, 5, 6)])
for field in ("F2", "F3", "Q"):
    print(f"RP2 over {field}:", reduced_homology_ranks(rp2, field).ranks)
