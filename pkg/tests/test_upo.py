import random
from itertools import combinations, permutations

import pytest

from oracles import brute_partitive
from permcm.cm import is_cm_permutation
from permcm.fixtures import FIG3_PI, load
from permcm.graph import (Graph, complement, complete_graph, cycle_graph, edgeless_graph,
                          induced_subgraph, is_connected, make_graph, path_graph)
from permcm.perm import Realizer, count_transitive_orientations, identity, perm_graph_id
from permcm.poset import antichain, chain, comparability_graph, poset_from_realizer
from permcm.upo import (DEGENERATE, TROTTER, EnumerationBoundExceeded, NotAComparabilityGraph,
                        is_partitive, is_upo, module_closure, nontrivial_partitive_subsets,
                        thm12_hypotheses, upo_orientation_oracle)


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for m in range(1 << len(pairs)):
        yield Graph(n, tuple(p for k, p in enumerate(pairs) if m >> k & 1))


def test_is_partitive_examples():
    assert is_partitive(complete_graph(3), (1, 2))
    assert is_partitive(cycle_graph(4), (1, 3))
    assert not is_partitive(path_graph(4), (1, 2))
    with pytest.raises(ValueError):
        is_partitive(path_graph(3), (4,))


def test_nontrivial_partitive_examples():
    assert list(nontrivial_partitive_subsets(path_graph(4))) == []
    assert list(nontrivial_partitive_subsets(complete_graph(3))) == [(1, 2), (1, 3), (2, 3)]
    assert list(nontrivial_partitive_subsets(cycle_graph(4))) == [(1, 3), (2, 4)]
    assert list(nontrivial_partitive_subsets(complete_graph(3), cap=1)) == [(1, 2)]
    with pytest.raises(EnumerationBoundExceeded):
        list(nontrivial_partitive_subsets(edgeless_graph(21)))


@pytest.mark.parametrize("n", range(0, 6))
def test_partitive_enumeration_matches_subset_scan(n):
    for g in all_graphs(n):
        found = list(nontrivial_partitive_subsets(g))
        assert found == sorted(found)
        assert found == sorted(brute_partitive(n, g.edges))


def test_module_closure_is_smallest_module():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(3, 7)
        g = Graph(n, tuple(p for p in combinations(range(1, n + 1), 2) if rng.random() < 0.5))
        seed = tuple(sorted(rng.sample(range(1, n + 1), 2)))
        k = module_closure(g, seed)
        assert is_partitive(g, k)
        modules = [m for m in brute_partitive(n, g.edges) if set(seed) <= set(m)]
        modules.append(tuple(range(1, n + 1)))
        assert all(set(k) <= set(m) for m in modules)


def test_is_upo_examples():
    v = is_upo(complement(path_graph(4)))
    assert v.upo and v.method == TROTTER
    k3 = is_upo(complete_graph(3))
    assert not k3.upo and k3.violator == (1, 2)
    e5 = is_upo(edgeless_graph(5))
    assert e5.upo and e5.method == DEGENERATE
    with pytest.raises(NotAComparabilityGraph):
        is_upo(cycle_graph(5))


def test_disconnected_upo_rule():
    two = make_graph(4, [(1, 2), (3, 4)])
    v = is_upo(two)
    assert not v.upo and v.violator == (1, 2)
    one = make_graph(5, [(1, 2), (2, 3)])
    assert is_upo(one).upo
    assert upo_orientation_oracle(two) is False and upo_orientation_oracle(one) is True


def test_orientation_oracle_examples():
    assert upo_orientation_oracle(path_graph(4))
    assert not upo_orientation_oracle(complete_graph(3))
    assert upo_orientation_oracle(cycle_graph(4))
    assert upo_orientation_oracle(edgeless_graph(3))
    with pytest.raises(NotAComparabilityGraph):
        upo_orientation_oracle(cycle_graph(5))


def test_thm12_hypotheses_examples():
    assert not thm12_hypotheses(poset_from_realizer(Realizer(identity(6), FIG3_PI)))
    assert not thm12_hypotheses(chain(3))
    assert thm12_hypotheses(antichain(4))


@pytest.mark.parametrize("n", range(0, 6))
def test_trotter_matches_orientation_oracle(n):
    for g in all_graphs(n):
        try:
            v = is_upo(g)
        except NotAComparabilityGraph:
            continue
        assert v.upo == upo_orientation_oracle(g)
        if not v.upo:
            assert is_partitive(g, v.violator)
            assert not g.is_independent(v.violator)


@pytest.mark.parametrize("n", range(0, 6))
def test_closure_search_matches_full_enumeration(n):
    for g in all_graphs(n):
        if len(g.edges) == 0 or not is_connected(g):
            continue
        try:
            v = is_upo(g)
        except NotAComparabilityGraph:
            continue
        bad = [k for k in nontrivial_partitive_subsets(g) if not g.is_independent(k)]
        assert v.upo == (not bad)


def test_cm_connected_implies_upo_complement():
    for n in range(1, 7):
        for pi in permutations(range(1, n + 1)):
            g = perm_graph_id(pi)
            if is_connected(g) and is_cm_permutation(g).cm:
                assert is_upo(complement(g)).upo


def test_fig3_complement_has_two_independent_halves():
    # the complement is the comparability graph of {1<2, 1<3, 4<6, 5<6}: two
    # cherries that reverse independently, so four orientations and no UPO
    g = complement(load("fig3"))
    assert g.edges == ((1, 2), (1, 3), (4, 6), (5, 6))
    assert count_transitive_orientations(g) == 4
    v = is_upo(g)
    assert not v.upo and v.violator == (1, 2, 3)
    assert not upo_orientation_oracle(g)
    for half in ((1, 2, 3), (4, 5, 6)):
        sub, _ = induced_subgraph(g, half)
        assert is_upo(sub).upo


def test_thm12_on_dimension_two_family():
    for n in range(1, 7):
        for pi in permutations(range(1, n + 1)):
            p = poset_from_realizer(Realizer(identity(n), pi))
            if thm12_hypotheses(p):
                assert is_upo(comparability_graph(p)).upo
