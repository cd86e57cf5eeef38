"""Cohen-Macaulay permutation graphs, dimension-2 posets and UPO comparability graphs."""

from .cm import (CmVerdict, NotAPermutationGraph, clique_partitions, is_cm_permutation,
                 is_cm_poset_dim2, level_connectivity_all_pairs, levels_to_clique_partition,
                 simplicial_sufficient, verify_prop33_structure)
from .graph import (Graph, complement, connected_components, induced_subgraph, is_well_covered,
                    make_graph, maximal_cliques, maximal_independent_sets, simplicial_vertices)
from .homology import (SimplicialComplex, independence_complex, link, oracle_is_cm_graph,
                       order_complex, reduced_homology_ranks, reisner_cm)
from .perm import (Orientation, RecognitionResult, Realizer, count_transitive_orientations,
                   perm_graph, perm_graph_id, recognize_permutation_graph, transitive_orientation)
from .poset import (Poset, cocomparability_graph, comparability_graph, cover_data, dual, heights,
                    is_connected_poset, level_subposet, normalize_realizer, ordinal_sum_split,
                    poset_from_realizer, poset_from_relation)
from .upo import (UpoVerdict, is_partitive, is_upo, nontrivial_partitive_subsets,
                  thm12_hypotheses, upo_orientation_oracle)

__version__ = "0.1.0"
