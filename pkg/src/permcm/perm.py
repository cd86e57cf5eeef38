"""Permutation graphs: construction from two linear orders and recognition.

A permutation is a tuple of labels, ``seq[p]`` being the label drawn at
position ``p`` on its line. Recognition goes through transitive orientations
of the graph and of its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence

from .graph import Graph, complement, members

Permutation = tuple[int, ...]

PERMUTATION = "permutation"
NOT_COMPARABILITY = "not_comparability"
NOT_COCOMPARABILITY = "not_cocomparability"


def check_permutation(seq: Iterable[int]) -> Permutation:
    seq = tuple(int(x) for x in seq)
    if sorted(seq) != list(range(1, len(seq) + 1)):
        raise ValueError(f"{list(seq)} is not a permutation of 1..{len(seq)}")
    return seq


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def positions(seq: Sequence[int]) -> list[int]:
    """``pos[x]`` is the position of label ``x``; index 0 is unused."""
    pos = [0] * (len(seq) + 1)
    for p, x in enumerate(seq):
        pos[x] = p
    return pos


@dataclass(frozen=True)
class Realizer:
    l1: Permutation
    l2: Permutation

    def __post_init__(self):
        object.__setattr__(self, "l1", check_permutation(self.l1))
        object.__setattr__(self, "l2", check_permutation(self.l2))
        if len(self.l1) != len(self.l2):
            raise ValueError(f"realizer lengths differ: {len(self.l1)} vs {len(self.l2)}")

    @property
    def n(self) -> int:
        return len(self.l1)

    def to_dict(self) -> dict:
        return {"l1": list(self.l1), "l2": list(self.l2)}


def perm_graph(r: Realizer) -> Graph:
    """Crossing graph: ``{i, j}`` is an edge iff the two orders disagree on it."""
    p1, p2 = positions(r.l1), positions(r.l2)
    n = r.n
    edges = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                  if (p1[i] - p1[j]) * (p2[i] - p2[j]) < 0)
    return Graph(n, edges)


def perm_graph_id(pi: Sequence[int]) -> Graph:
    pi = check_permutation(pi)
    return perm_graph(Realizer(identity(len(pi)), pi))


def inversion_count(seq: Sequence[int]) -> int:
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


@dataclass(frozen=True)
class Orientation:
    """One direction ``(a, b)`` meaning ``a -> b`` for every edge of ``graph``."""

    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def successors(self) -> list[int]:
        out = [0] * (self.graph.n + 1)
        for a, b in self.arcs:
            out[a] |= 1 << b
        return out

    def is_transitive(self) -> bool:
        """Full re-check: every path ``a -> b -> c`` has the arc ``a -> c``."""
        out = self.successors()
        for a in self.graph.vertices:
            for b in members(out[a]):
                if out[b] & ~out[a]:
                    return False
        return True

    def is_complete(self) -> bool:
        if len(self.arcs) != len(self.graph.edges):
            return False
        return all(((i, j) in self.arcs) != ((j, i) in self.arcs) for i, j in self.graph.edges)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, frozenset((b, a) for a, b in self.arcs))

    def to_list(self) -> list[list[int]]:
        return [list(a) for a in sorted(self.arcs)]


def _implication_class(adj: list[int], a: int, b: int) -> set[tuple[int, int]] | None:
    """Arcs forced by ``a -> b`` in the graph given by ``adj``.

    Returns None when the class contains an arc together with its reverse.
    """
    cls = {(a, b)}
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        forced = []
        # x->y forces x->z when z ~ x and z is not adjacent to y
        for z in members(adj[x] & ~adj[y] & ~(1 << y)):
            forced.append((x, z))
        # x->y forces z->y when z ~ y and z is not adjacent to x
        for z in members(adj[y] & ~adj[x] & ~(1 << x)):
            forced.append((z, y))
        for arc in forced:
            if arc in cls:
                continue
            if (arc[1], arc[0]) in cls:
                return None
            cls.add(arc)
            stack.append(arc)
    return cls


def transitive_orientation(g: Graph) -> Orientation | None:
    """A transitive orientation of ``g``, or None if ``g`` is not a comparability graph.

    Implication classes are peeled off one at a time, each time seeded with the
    lexicographically smallest remaining edge oriented from its smaller end.
    The union of the classes is re-verified for transitivity before returning.
    """
    adj = list(g.adj)
    arcs: set[tuple[int, int]] = set()
    remaining = sorted(g.edges, reverse=True)
    while remaining:
        a, b = remaining.pop()
        if not adj[a] >> b & 1:
            continue
        cls = _implication_class(adj, a, b)
        if cls is None:
            return None
        arcs |= cls
        for x, y in cls:
            adj[x] &= ~(1 << y)
            adj[y] &= ~(1 << x)
    result = Orientation(g, frozenset(arcs))
    if not (result.is_complete() and result.is_transitive()):
        raise AssertionError(f"implication-class forcing produced a non-transitive orientation for {g}")
    return result


class EdgeCapExceeded(ValueError):
    pass


DEFAULT_EDGE_CAP = 20


def count_transitive_orientations(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> int:
    """Exact number of transitive orientations, by exhaustive backtracking.

    Edges are assigned one at a time; a partial assignment is abandoned as soon
    as two assigned arcs ``a -> b -> c`` have no compatible arc ``a -> c``.
    """
    m = len(g.edges)
    if m > cap:
        raise EdgeCapExceeded(f"{m} edges exceeds the orientation-count cap of {cap}")
    n = g.n
    out = [0] * (n + 1)
    inn = [0] * (n + 1)
    edges = g.edges
    adj = g.adj

    def consistent(a: int, b: int) -> bool:
        # arc a->b just added; check every 2-path through it
        for c in members(out[b]):
            if not adj[a] >> c & 1 or inn[a] >> c & 1:
                return False
        for z in members(inn[a]):
            if not adj[z] >> b & 1 or out[b] >> z & 1:
                return False
        return True

    def rec(k: int) -> int:
        if k == m:
            return 1
        i, j = edges[k]
        total = 0
        for a, b in ((i, j), (j, i)):
            out[a] |= 1 << b
            inn[b] |= 1 << a
            if consistent(a, b):
                total += rec(k + 1)
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)
        return total

    return rec(0)


def topological_order(n: int, arcs: Iterable[tuple[int, int]]) -> Permutation:
    """Topological order of ``1..n`` breaking ties by smallest label."""
    succ: list[list[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapify(heap)
    order = []
    while heap:
        v = heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heappush(heap, w)
    if len(order) != n:
        raise ValueError("arc set contains a cycle")
    return tuple(order)


@dataclass(frozen=True)
class RecognitionResult:
    outcome: str
    realizer: Realizer | None = None
    witness: Orientation | None = None

    @property
    def is_permutation(self) -> bool:
        return self.outcome == PERMUTATION

    def to_dict(self) -> dict:
        d: dict = {"outcome": self.outcome}
        if self.realizer is not None:
            d["realizer"] = self.realizer.to_dict()
        if self.witness is not None:
            d["orientation"] = self.witness.to_list()
        return d


def recognize_permutation_graph(g: Graph) -> RecognitionResult:
    """Decide whether ``g`` is a permutation graph and, if so, return a realizer.

    With ``F`` a transitive orientation of ``g`` and ``C`` one of its complement,
    ``l1`` sorts ``F ∪ C`` and ``l2`` sorts ``reverse(F) ∪ C``; the two orders
    disagree exactly on the edges of ``g``.
    """
    f = transitive_orientation(g)
    if f is None:
        return RecognitionResult(NOT_COMPARABILITY)
    c = transitive_orientation(complement(g))
    if c is None:
        return RecognitionResult(NOT_COCOMPARABILITY, witness=f)
    l1 = topological_order(g.n, f.arcs | c.arcs)
    l2 = topological_order(g.n, f.reversed().arcs | c.arcs)
    realizer = Realizer(l1, l2)
    if perm_graph(realizer) != g:
        raise AssertionError(f"realizer {realizer} does not regenerate {g}")
    return RecognitionResult(PERMUTATION, realizer, f)
