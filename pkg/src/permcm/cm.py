"""Cohen-Macaulay decisions for permutation graphs and dimension-2 posets.

Graph side: a permutation graph is CM exactly when it is well-covered and its
vertex set splits into maximal cliques, as many as the independence number,
in only one way. Poset side: a dimension-2 poset is CM exactly when it is an
antichain, or pure with every pair of consecutive levels inducing a connected
subposet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .graph import (Graph, VertexSet, connected_components, is_well_covered, mask_of,
                    maximal_clique_masks, members, simplicial_vertices)
from .perm import RecognitionResult, Realizer, recognize_permutation_graph
from .poset import (NotPureError, Poset, cocomparability_graph, heights, is_connected_poset,
                    level_subposet, poset_from_realizer)

NOT_WELL_COVERED = "not_well_covered"
MULTIPLE_PARTITIONS = "multiple_partitions"
UNIQUE_PARTITION = "unique_partition"
ANTICHAIN_OR_TRIVIAL = "antichain_or_trivial"

CliquePartition = tuple[VertexSet, ...]


class NotAPermutationGraph(ValueError):
    def __init__(self, result: RecognitionResult):
        super().__init__(f"graph is not a permutation graph ({result.outcome})")
        self.result = result


def clique_partitions(g: Graph, r: int, limit: int | None = 2) -> list[CliquePartition]:
    """Partitions of the vertex set into exactly ``r`` maximal cliques.

    Exact-cover backtracking: branch on the smallest uncovered vertex, trying
    the maximal cliques through it in lexicographic order. ``limit=None``
    enumerates everything.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    cliques = sorted(maximal_clique_masks(g), key=members)
    through: dict[int, list[int]] = {v: [c for c in cliques if c >> v & 1] for v in g.vertices}
    full = g.full_mask
    found: list[CliquePartition] = []
    chosen: list[int] = []

    def rec(covered: int) -> bool:
        if covered == full:
            if len(chosen) == r:
                found.append(tuple(members(c) for c in chosen))
            return limit is not None and len(found) >= limit
        if len(chosen) >= r:
            return False
        free = full & ~covered
        v = (free & -free).bit_length() - 1
        for c in through[v]:
            if c & covered:
                continue
            chosen.append(c)
            done = rec(covered | c)
            chosen.pop()
            if done:
                return True
        return False

    if g.n == 0:
        return [()] if r == 0 else []
    rec(0)
    return found


@dataclass(frozen=True)
class CmVerdict:
    cm: bool
    reason: str
    r: int
    partitions_found: tuple[CliquePartition, ...] = ()
    recognition: RecognitionResult | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "cm": self.cm,
            "reason": self.reason,
            "r": self.r,
            "partitions": [[list(part) for part in p] for p in self.partitions_found],
        }


def is_cm_permutation(g: Graph) -> CmVerdict:
    """Decide Cohen-Macaulayness of a permutation graph via clique partitions.

    Raises NotAPermutationGraph for any other input; the characterization
    only holds for permutation graphs.
    """
    rec = recognize_permutation_graph(g)
    if not rec.is_permutation:
        raise NotAPermutationGraph(rec)
    m = len(g.edges)
    if m == 0:
        part = tuple((v,) for v in g.vertices)
        return CmVerdict(True, ANTICHAIN_OR_TRIVIAL, g.n, (part,), rec)
    if m == g.n * (g.n - 1) // 2:
        return CmVerdict(True, ANTICHAIN_OR_TRIVIAL, 1, (tuple(g.vertices),), rec)
    wc = is_well_covered(g)
    if not wc.well_covered:
        return CmVerdict(False, NOT_WELL_COVERED, wc.r, (), rec)
    parts = clique_partitions(g, wc.r, limit=2)
    if len(parts) == 1:
        return CmVerdict(True, UNIQUE_PARTITION, wc.r, tuple(parts), rec)
    if not parts:
        # a well-covered permutation graph always has its level partition
        raise AssertionError(f"no partition into {wc.r} maximal cliques for {g}")
    return CmVerdict(False, MULTIPLE_PARTITIONS, wc.r, tuple(parts), rec)


def _levels_connected(p: Poset, pairs) -> bool:
    lev = heights(p)
    return all(is_connected_poset(level_subposet(p, i, j, lev)[0]) for i, j in pairs)


def is_cm_poset_dim2(p: Poset, r: Realizer) -> bool:
    """Antichain, or pure with each consecutive pair of levels connected."""
    if poset_from_realizer(r) != p:
        raise ValueError("realizer does not realize the given poset")
    if p.is_antichain():
        return True
    lev = heights(p)
    if not lev.pure:
        return False
    return _levels_connected(p, [(i, i + 1) for i in range(lev.rank)])


def level_connectivity_all_pairs(p: Poset) -> bool:
    lev = heights(p)
    if not lev.pure:
        raise NotPureError("level connectivity is defined for pure posets only")
    return _levels_connected(p, [(i, j) for i in range(lev.rank + 1)
                                 for j in range(i + 1, lev.rank + 1)])


def validate_clique_partition(g: Graph, part: Sequence[Sequence[int]]) -> None:
    """Raise ValueError unless ``part`` splits the vertices into maximal cliques of ``g``."""
    seen: set[int] = set()
    for block in part:
        if not block:
            raise ValueError("empty part")
        if seen & set(block):
            raise ValueError(f"part {tuple(block)} overlaps an earlier part")
        seen |= set(block)
        if not g.is_clique(block):
            raise ValueError(f"part {tuple(block)} is not a clique")
        m = mask_of(block)
        for v in g.vertices:
            if not m >> v & 1 and g.adj[v] & m == m:
                raise ValueError(f"part {tuple(block)} extends by vertex {v}")
    if seen != set(g.vertices):
        raise ValueError("parts do not cover the vertex set")


def levels_to_clique_partition(p: Poset) -> CliquePartition:
    """Level sets of a pure poset, checked to be maximal cliques of its cocomparability graph."""
    lev = heights(p)
    if not lev.pure:
        raise NotPureError("levels form a clique partition only for pure posets")
    part = tuple(lev.levels)
    try:
        validate_clique_partition(cocomparability_graph(p), part)
    except ValueError as exc:
        raise AssertionError(f"level sets of a pure poset failed validation: {exc}") from exc
    return part


def _order_satisfies_chain_rule(g: Graph, order: Sequence[VertexSet]) -> bool:
    where = {v: k for k, block in enumerate(order) for v in block}
    k = len(order)
    # reach[i][x]: parts j > i reachable from x by non-edges through consecutive parts
    reach: dict[int, int] = {}
    for idx in range(k - 1, -1, -1):
        for x in order[idx]:
            acc = 0
            if idx + 1 < k:
                for y in order[idx + 1]:
                    if not g.has_edge(x, y):
                        acc |= (1 << y) | reach[y]
            reach[x] = acc
    for x in g.vertices:
        for y in g.vertices:
            if where[x] < where[y]:
                if (not g.has_edge(x, y)) != bool(reach[x] >> y & 1):
                    return False
    return True


def verify_prop33_structure(g: Graph, part: Sequence[Sequence[int]],
                            max_parts: int = 9) -> bool:
    """Check the layered non-edge structure of a well-covered cocomparability graph.

    True iff some ordering ``Y_0, ..., Y_r`` of the parts makes a non-edge
    between ``Y_i`` and ``Y_j`` (``i < j``) equivalent to a path of non-edges
    stepping through ``Y_i, Y_{i+1}, ..., Y_j``. Orderings are searched
    exhaustively, so at most ``max_parts`` parts are accepted.
    """
    validate_clique_partition(g, part)
    blocks = [tuple(sorted(b)) for b in part]
    if len(blocks) > max_parts:
        raise ValueError(f"{len(blocks)} parts exceeds the ordering search bound {max_parts}")
    return any(_order_satisfies_chain_rule(g, order) for order in permutations(blocks))


def simplicial_sufficient(g: Graph, part: Sequence[Sequence[int]]) -> bool:
    """At most one part without a simplicial vertex in each connected component."""
    validate_clique_partition(g, part)
    simp = set(simplicial_vertices(g))
    for comp in connected_components(g):
        cs = set(comp)
        bare = [b for b in part if cs & set(b) and not simp & set(b)]
        if len(bare) > 1:
            return False
    return True
