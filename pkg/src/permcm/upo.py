"""Uniquely partially orderable comparability graphs.

A connected comparability graph is UPO iff every nontrivial partitive subset
(module) is independent. This module decides that criterion, the matching
sufficient condition on posets, and an independent oracle that counts
transitive orientations directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, VertexSet, connected_components, induced_subgraph, mask_of, members
from .perm import DEFAULT_EDGE_CAP, count_transitive_orientations, transitive_orientation
from .poset import Poset, heights, is_connected_poset, level_subposet, ordinal_sum_split

TROTTER = "trotter"
DEGENERATE = "degenerate"
DEFAULT_ENUMERATION_BOUND = 20


class NotAComparabilityGraph(ValueError):
    pass


class EnumerationBoundExceeded(ValueError):
    pass


def _splitters(g: Graph, k: int) -> int:
    """Outside vertices adjacent to some but not all of ``k``."""
    out = 0
    for v in members(g.full_mask & ~k):
        hit = g.adj[v] & k
        if hit and hit != k:
            out |= 1 << v
    return out


def is_partitive(g: Graph, k) -> bool:
    km = mask_of(k)
    if km & ~g.full_mask:
        raise ValueError(f"{tuple(k)} is not a subset of 1..{g.n}")
    return _splitters(g, km) == 0


def nontrivial_partitive_subsets(g: Graph, cap: int | None = None,
                                 bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[VertexSet]:
    """Partitive subsets with ``2 <= |K| <= n - 1``, in lexicographic order.

    Depth-first growth over increasing label sequences yields lexicographic
    order directly. A branch dies once a skipped (smaller, excluded) vertex
    splits the current set, since no extension can absorb it.
    """
    if g.n > bound:
        raise EnumerationBoundExceeded(f"n = {g.n} exceeds the enumeration bound {bound}")
    emitted = 0
    n = g.n

    def grow(k: int, last: int) -> Iterator[VertexSet]:
        nonlocal emitted
        size = bin(k).count("1")
        split = _splitters(g, k)
        if split & ((1 << (last + 1)) - 1):
            return
        if 2 <= size <= n - 1 and not split:
            if cap is not None and emitted >= cap:
                return
            emitted += 1
            yield members(k)
        for v in range(last + 1, n + 1):
            if cap is not None and emitted >= cap:
                return
            yield from grow(k | 1 << v, v)

    for first in range(1, n + 1):
        yield from grow(1 << first, first)


def module_closure(g: Graph, seed) -> VertexSet:
    """Smallest partitive subset containing ``seed``."""
    k = mask_of(seed)
    while True:
        split = _splitters(g, k)
        if not split:
            return members(k)
        k |= split


@dataclass(frozen=True)
class UpoVerdict:
    upo: bool
    method: str
    violator: VertexSet | None = None

    def to_dict(self) -> dict:
        return {"upo": self.upo, "method": self.method,
                "violator": list(self.violator) if self.violator is not None else None}


def _trotter_connected(g: Graph) -> VertexSet | None:
    """A non-independent nontrivial partitive subset of connected ``g``, or None.

    Every such subset contains an edge and therefore the module generated by
    that edge, so closing each edge is an exhaustive search.
    """
    for a, b in g.edges:
        k = module_closure(g, (a, b))
        if len(k) < g.n:
            return k
    return None


def is_upo(g: Graph) -> UpoVerdict:
    if transitive_orientation(g) is None:
        raise NotAComparabilityGraph("graph has no transitive orientation")
    edged = [c for c in connected_components(g) if len(c) > 1]
    if not edged:
        return UpoVerdict(True, DEGENERATE)
    if len(edged) > 1:
        # each edged component can be reversed on its own
        return UpoVerdict(False, DEGENERATE, edged[0])
    sub, labels = induced_subgraph(g, edged[0])
    bad = _trotter_connected(sub)
    if bad is None:
        return UpoVerdict(True, TROTTER)
    return UpoVerdict(False, TROTTER, tuple(labels[v - 1] for v in bad))


def thm12_hypotheses(p: Poset) -> bool:
    """Pure, every pair of levels connected, and not an ordinal sum."""
    lev = heights(p)
    if not lev.pure:
        return False
    for i in range(lev.rank + 1):
        for j in range(i + 1, lev.rank + 1):
            if not is_connected_poset(level_subposet(p, i, j, lev)[0]):
                return False
    return ordinal_sum_split(p) is None


def upo_orientation_oracle(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> bool:
    """UPO iff the transitive orientations are exactly one poset and its dual."""
    if not g.edges:
        return True
    count = count_transitive_orientations(g, cap)
    if count == 0:
        raise NotAComparabilityGraph("graph has no transitive orientation")
    return count == 2
