from itertools import permutations

import pytest

from oracles import brute_clique_partitions
from permcm.cm import (ANTICHAIN_OR_TRIVIAL, MULTIPLE_PARTITIONS, NOT_WELL_COVERED,
                       UNIQUE_PARTITION, NotAPermutationGraph, clique_partitions,
                       is_cm_permutation, is_cm_poset_dim2, level_connectivity_all_pairs,
                       levels_to_clique_partition, simplicial_sufficient,
                       validate_clique_partition, verify_prop33_structure)
from permcm.fixtures import FIG3_PI, load
from permcm.graph import (complete_graph, cycle_graph, edgeless_graph, is_well_covered,
                          make_graph, path_graph)
from permcm.perm import Realizer, identity, perm_graph_id, recognize_permutation_graph
from permcm.poset import (NotPureError, antichain, chain, cocomparability_graph, heights,
                          poset_from_realizer, poset_from_relation)

EX35 = Realizer(identity(6), FIG3_PI)


def id_family(max_n=6):
    for n in range(1, max_n + 1):
        for pi in permutations(range(1, n + 1)):
            yield n, pi


def test_clique_partitions_examples():
    assert clique_partitions(load("fig3"), 2, limit=2) == [
        ((1, 4, 5), (2, 3, 6)), ((1, 6), (2, 3, 4, 5))]
    assert clique_partitions(load("fig1"), 2, limit=2) == [((1, 2, 5), (3, 4))]
    assert clique_partitions(complete_graph(4), 1) == [((1, 2, 3, 4),)]
    assert clique_partitions(load("fig3"), 2, limit=1) == [((1, 4, 5), (2, 3, 6))]
    with pytest.raises(ValueError):
        clique_partitions(load("fig1"), 2, limit=0)


def test_full_enumeration_counts():
    assert len(clique_partitions(load("fig3"), 2, limit=None)) == 2
    assert len(clique_partitions(load("fig1"), 2, limit=None)) == 1
    assert len(clique_partitions(load("fig4"), 4, limit=None)) == 1


def test_partitions_match_exact_cover_oracle():
    for n, pi in id_family(6):
        g = perm_graph_id(pi)
        wc = is_well_covered(g)
        if not wc.well_covered:
            continue
        found = clique_partitions(g, wc.r, limit=None)
        assert sorted(found) == brute_clique_partitions(n, g.edges, wc.r)
        for part in found:
            validate_clique_partition(g, part)


def test_is_cm_permutation_examples():
    v1 = is_cm_permutation(load("fig1"))
    assert v1.cm and v1.reason == UNIQUE_PARTITION
    v3 = is_cm_permutation(load("fig3"))
    assert not v3.cm and v3.reason == MULTIPLE_PARTITIONS and len(v3.partitions_found) == 2
    v4 = is_cm_permutation(load("fig4"))
    assert v4.cm and v4.partitions_found == (((1, 2), (3, 4), (5, 6), (7, 8)),)
    assert v4.r == 4


def test_is_cm_permutation_degenerate_and_errors():
    assert is_cm_permutation(complete_graph(4)).reason == ANTICHAIN_OR_TRIVIAL
    assert is_cm_permutation(edgeless_graph(3)).reason == ANTICHAIN_OR_TRIVIAL
    assert is_cm_permutation(path_graph(3)).reason == NOT_WELL_COVERED
    with pytest.raises(NotAPermutationGraph) as exc:
        is_cm_permutation(load("fig5"))
    assert exc.value.result.outcome == "not_cocomparability"
    with pytest.raises(NotAPermutationGraph):
        is_cm_permutation(cycle_graph(5))


def test_verdict_json_shape():
    d = is_cm_permutation(load("fig3")).to_dict()
    assert d == {"cm": False, "reason": "multiple_partitions", "r": 2,
                 "partitions": [[[1, 4, 5], [2, 3, 6]], [[1, 6], [2, 3, 4, 5]]]}


def test_is_cm_poset_examples():
    assert not is_cm_poset_dim2(poset_from_realizer(EX35), EX35)
    ac = Realizer(identity(4), (4, 3, 2, 1))
    assert is_cm_poset_dim2(antichain(4), ac)
    assert is_cm_poset_dim2(chain(4), Realizer(identity(4), identity(4)))
    with pytest.raises(ValueError):
        is_cm_poset_dim2(chain(4), ac)


def test_all_pairs_connectivity_examples():
    assert level_connectivity_all_pairs(chain(4))
    assert not level_connectivity_all_pairs(poset_from_realizer(EX35))
    fig4 = poset_from_realizer(recognize_permutation_graph(load("fig4")).realizer)
    assert level_connectivity_all_pairs(fig4)
    with pytest.raises(NotPureError):
        level_connectivity_all_pairs(poset_from_relation(4, [(1, 2), (1, 3), (3, 4)]))


def test_levels_to_clique_partition():
    assert levels_to_clique_partition(poset_from_realizer(EX35)) == ((1, 4, 5), (2, 3, 6))
    assert levels_to_clique_partition(antichain(3)) == ((1, 2, 3),)
    assert levels_to_clique_partition(chain(3)) == ((1,), (2,), (3,))
    with pytest.raises(NotPureError):
        levels_to_clique_partition(poset_from_relation(4, [(1, 2), (1, 3), (3, 4)]))


def test_prop33_examples():
    assert verify_prop33_structure(load("fig3"), [(1, 4, 5), (2, 3, 6)])
    assert verify_prop33_structure(load("fig1"), [(1, 2, 5), (3, 4)])
    assert verify_prop33_structure(cycle_graph(4), [(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        verify_prop33_structure(cycle_graph(4), [(1, 2), (3,)])


def test_prop33_holds_for_every_pure_level_partition():
    for n, pi in id_family(6):
        p = poset_from_realizer(Realizer(identity(n), pi))
        if heights(p).pure:
            part = levels_to_clique_partition(p)
            assert verify_prop33_structure(cocomparability_graph(p), part)


def test_prop33_rejects_non_layered_partition():
    # found by exhaustive search over 6-vertex graphs: whichever part sits in the
    # middle, some path of non-edges skips over a real edge (e.g. 1-5-3 vs 1-3)
    g = make_graph(6, [(1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4)])
    part = [(1, 6), (2, 5), (3, 4)]
    validate_clique_partition(g, part)
    assert not verify_prop33_structure(g, part)


def test_simplicial_sufficient_examples():
    assert simplicial_sufficient(load("fig1"), [(1, 2, 5), (3, 4)])
    assert not simplicial_sufficient(load("fig4"), [(1, 2), (3, 4), (5, 6), (7, 8)])
    assert is_cm_permutation(load("fig4")).cm
    assert simplicial_sufficient(complete_graph(4), [(1, 2, 3, 4)])


def test_graph_and_poset_side_agree():
    for n, pi in id_family(6):
        r = Realizer(identity(n), pi)
        assert is_cm_permutation(perm_graph_id(pi)).cm == is_cm_poset_dim2(poset_from_realizer(r), r)


def test_simplicial_condition_is_sufficient():
    for n, pi in id_family(6):
        g = perm_graph_id(pi)
        wc = is_well_covered(g)
        if not wc.well_covered:
            continue
        for part in clique_partitions(g, wc.r, limit=None):
            if simplicial_sufficient(g, part):
                assert is_cm_permutation(g).cm
