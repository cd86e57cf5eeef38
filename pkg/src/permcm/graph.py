"""Simple undirected graphs on the labels 1..n.

Vertex sets are plain sorted tuples of labels. Adjacency is kept as one
integer bitmask per vertex (bit ``v`` set when ``v`` is a neighbour), which
keeps clique enumeration and neighbourhood tests cheap in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

VertexSet = tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertices ``1..n`` and canonical ``(i, j)``, ``i < j`` edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> VertexSet:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def is_clique(self, s: Iterable[int]) -> bool:
        s = list(s)
        return all(self.has_edge(a, b) for k, a in enumerate(s) for b in s[k + 1:])

    def is_independent(self, s: Iterable[int]) -> bool:
        s = list(s)
        return not any(self.has_edge(a, b) for k, a in enumerate(s) for b in s[k + 1:])

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a canonical graph; duplicate and reversed pairs collapse."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    canon = set()
    for e in edges:
        i, j = (int(x) for x in e)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge {(i, j)} has an endpoint outside 1..{n}")
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        canon.add((min(i, j), max(i, j)))
    return Graph(n, tuple(sorted(canon)))


def graph_from_dict(data: dict) -> Graph:
    return make_graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])])


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def edgeless_graph(n: int) -> Graph:
    return Graph(n, ())


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple((i, j) for i in g.vertices for j in range(i + 1, g.n + 1)
                            if not g.has_edge(i, j)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph on ``s``, relabelled to ``1..|s|``.

    Returns the subgraph together with ``labels`` where ``labels[k - 1]`` is the
    vertex of ``g`` carried by vertex ``k`` of the subgraph.
    """
    labels = tuple(sorted(set(s)))
    for v in labels:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    index = {v: k + 1 for k, v in enumerate(labels)}
    edges = tuple((index[i], index[j]) for i, j in g.edges if i in index and j in index)
    return Graph(len(labels), edges), labels


def _bron_kerbosch(adj, r: int, p: int, x: int, out: list[int]) -> None:
    if not p and not x:
        out.append(r)
        return
    # pivot maximising |P ∩ N(u)| keeps the branching small
    pivot = max(members(p | x), key=lambda u: bin(p & adj[u]).count("1"))
    cand = p & ~adj[pivot]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        _bron_kerbosch(adj, r | low, p & adj[v], x & adj[v], out)
        p &= ~low
        x |= low
        cand ^= low


def maximal_clique_masks(g: Graph) -> list[int]:
    if g.n == 0:
        return []
    out: list[int] = []
    _bron_kerbosch(g.adj, 0, g.full_mask, 0, out)
    return out


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All inclusion-maximal cliques, each sorted, in lexicographic order."""
    return sorted(members(m) for m in maximal_clique_masks(g))


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """Inclusion-maximal independent sets (maximal cliques of the complement)."""
    return maximal_cliques(complement(g))


class WellCovered(NamedTuple):
    well_covered: bool
    r: int
    witness: tuple[VertexSet, VertexSet] | None = None


def is_well_covered(g: Graph) -> WellCovered:
    """Check that every maximal independent set has the same size.

    ``r`` is the independence number. When the graph is not well-covered the
    witness holds a smallest and a largest maximal independent set.
    """
    sets = maximal_independent_sets(g)
    if not sets:
        return WellCovered(True, 0)
    small = min(sets, key=len)
    large = max(sets, key=len)
    if len(small) == len(large):
        return WellCovered(True, len(small))
    return WellCovered(False, len(large), (small, large))


def simplicial_vertices(g: Graph) -> VertexSet:
    return tuple(v for v in g.vertices if g.is_clique(g.neighbors(v)))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as sorted vertex tuples, ordered by least element."""
    seen = 0
    comps = []
    for v in g.vertices:
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in members(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(members(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
