"""Strict partial orders on 1..n, their heights, levels and dimension-2 structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, VertexSet
from .perm import Permutation, Realizer, identity, positions


class NotPureError(ValueError):
    pass


def _closure(rel: np.ndarray) -> np.ndarray:
    """Transitive closure by Warshall's algorithm on a boolean table."""
    rel = rel.copy()
    for k in range(rel.shape[0]):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


@dataclass(frozen=True, eq=False)
class Poset:
    """Strict order ``x < y`` stored as ``lt[x - 1, y - 1]``.

    Construction re-verifies irreflexivity and transitivity; antisymmetry
    follows from the two.
    """

    n: int
    lt: np.ndarray = field(repr=False)

    def __post_init__(self):
        lt = np.array(self.lt, dtype=bool).reshape(self.n, self.n)
        lt.setflags(write=False)
        object.__setattr__(self, "lt", lt)
        if lt.diagonal().any():
            raise ValueError("relation is not irreflexive (it has a cycle)")
        if self.n and ((lt.astype(np.int64) @ lt.astype(np.int64) > 0) & ~lt).any():
            raise ValueError("relation is not transitive")

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and np.array_equal(self.lt, other.lt)

    def __hash__(self):
        return hash((self.n, self.lt.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, lt={self.pairs()})"

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def less(self, x: int, y: int) -> bool:
        return bool(self.lt[x - 1, y - 1])

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.lt[x - 1, y - 1] or self.lt[y - 1, x - 1])

    def pairs(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.lt)
        return sorted((int(x) + 1, int(y) + 1) for x, y in zip(xs, ys))

    def up_masks(self) -> list[int]:
        """``up[x]`` is the bitmask of elements strictly above ``x``."""
        up = [0] * (self.n + 1)
        for x, y in self.pairs():
            up[x] |= 1 << y
        return up

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        lt = self.lt.astype(np.int64)
        between = (lt @ lt) > 0
        xs, ys = np.nonzero(self.lt & ~between)
        return sorted((int(x) + 1, int(y) + 1) for x, y in zip(xs, ys))

    def is_antichain(self) -> bool:
        return not self.lt.any()

    def to_dict(self) -> dict:
        return {"n": self.n, "lt": [list(p) for p in self.pairs()]}


def poset_from_relation(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of ``pairs``; raises ValueError on a cycle."""
    rel = np.zeros((n, n), dtype=bool)
    for x, y in pairs:
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"pair {(x, y)} outside 1..{n}")
        rel[x - 1, y - 1] = True
    rel = _closure(rel)
    if rel.diagonal().any():
        raise ValueError("relation contains a cycle")
    return Poset(n, rel)


def poset_from_dict(data: dict) -> Poset:
    return poset_from_relation(int(data["n"]), [tuple(p) for p in data.get("lt", [])])


def poset_from_realizer(r: Realizer) -> Poset:
    """``x < y`` iff ``x`` precedes ``y`` in both linear orders."""
    p1 = np.array(positions(r.l1)[1:])
    p2 = np.array(positions(r.l2)[1:])
    lt = (p1[:, None] < p1[None, :]) & (p2[:, None] < p2[None, :])
    return Poset(r.n, lt)


def chain(n: int) -> Poset:
    return poset_from_realizer(Realizer(identity(n), identity(n)))


def antichain(n: int) -> Poset:
    return Poset(n, np.zeros((n, n), dtype=bool))


def dual(p: Poset) -> Poset:
    return Poset(p.n, p.lt.T)


def induced_subposet(p: Poset, s: Iterable[int]) -> tuple[Poset, VertexSet]:
    """Induced subposet relabelled to ``1..|s|``, plus the original labels."""
    labels = tuple(sorted(set(s)))
    idx = [v - 1 for v in labels]
    return Poset(len(labels), p.lt[np.ix_(idx, idx)]), labels


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.n, tuple((x, y) for x in p.elements for y in range(x + 1, p.n + 1)
                            if p.comparable(x, y)))


def cocomparability_graph(p: Poset) -> Graph:
    return Graph(p.n, tuple((x, y) for x in p.elements for y in range(x + 1, p.n + 1)
                            if not p.comparable(x, y)))


def is_connected_poset(p: Poset) -> bool:
    """Connectivity of the comparability graph; posets with at most one element count as connected."""
    if p.n <= 1:
        return True
    sym = p.lt | p.lt.T
    seen = np.zeros(p.n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        frontier = sym[frontier].any(axis=0) & ~seen
        seen |= frontier
    return bool(seen.all())


@dataclass(frozen=True)
class LevelDecomposition:
    height: dict[int, int]
    levels: tuple[VertexSet, ...]
    pure: bool

    @property
    def rank(self) -> int:
        return len(self.levels) - 1


def heights(p: Poset) -> LevelDecomposition:
    """Heights by longest path over the cover relation.

    ``height(p)`` is the length of the longest chain ending at ``p``, which is
    the rank of the down-set of ``p``. The poset is pure when every cover
    raises height by exactly one and every maximal element sits at the top
    level; then every maximal chain has length ``rank``.
    """
    covers = p.covers()
    below: dict[int, list[int]] = {x: [] for x in p.elements}
    for x, y in covers:
        below[y].append(x)
    h: dict[int, int] = {}
    # a linear extension: fewer elements below comes first
    for y in sorted(p.elements, key=lambda v: (int(p.lt[:, v - 1].sum()), v)):
        h[y] = 1 + max((h[x] for x in below[y]), default=-1)
    if not h:
        return LevelDecomposition({}, (), True)
    rank = max(h.values())
    levels = tuple(tuple(v for v in p.elements if h[v] == i) for i in range(rank + 1))
    maximal = [x for x in p.elements if not p.lt[x - 1].any()]
    pure = all(h[y] == h[x] + 1 for x, y in covers) and all(h[m] == rank for m in maximal)
    return LevelDecomposition(h, levels, pure)


def level_subposet(p: Poset, i: int, j: int, levels: LevelDecomposition | None = None
                   ) -> tuple[Poset, VertexSet]:
    """Induced subposet on the elements of height ``i`` or ``j``."""
    levels = levels or heights(p)
    if not 0 <= i < j <= levels.rank:
        raise ValueError(f"need 0 <= i < j <= {levels.rank}, got ({i}, {j})")
    return induced_subposet(p, levels.levels[i] + levels.levels[j])


def linear_extension(p: Poset) -> Permutation:
    """Elements sorted by (height, label)."""
    h = heights(p).height
    return tuple(sorted(p.elements, key=lambda v: (h[v], v)))


def ordinal_sum_split(p: Poset) -> tuple[VertexSet, VertexSet] | None:
    """Smallest proper split ``(lower, upper)`` with every lower element below every upper one.

    Any such lower part is a prefix of the height-sorted linear extension, so
    only its ``n - 1`` prefixes are tested: prefix ``k`` qualifies exactly when
    ``k * (n - k)`` of the crossing pairs are comparable.
    """
    order = linear_extension(p)
    n = p.n
    idx = [v - 1 for v in order]
    lt = p.lt[np.ix_(idx, idx)]
    for k in range(1, n):
        if int(lt[:k, k:].sum()) == k * (n - k):
            return tuple(sorted(order[:k])), tuple(sorted(order[k:]))
    return None


def normalize_realizer(r: Realizer) -> tuple[Realizer, Permutation]:
    """Relabel so that ``l1`` becomes the identity.

    ``relabel[x - 1]`` is the new label of old element ``x``, namely its
    position in ``l1`` counted from 1.
    """
    pos = positions(r.l1)
    relabel = tuple(pos[x] + 1 for x in range(1, r.n + 1))
    l2 = tuple(relabel[x - 1] for x in r.l2)
    return Realizer(identity(r.n), l2), relabel


def relabel_poset(p: Poset, relabel: Sequence[int]) -> Poset:
    """Transport ``p`` along ``x -> relabel[x - 1]``."""
    return poset_from_relation(p.n, [(relabel[x - 1], relabel[y - 1]) for x, y in p.pairs()])


@dataclass(frozen=True)
class CoverData:
    """Up-covers and the within-level orders of a pure dimension-2 poset.

    Inside a level the order is reversed integer order: ``x <_i y`` iff ``x > y``.
    ``x_min`` and ``x_max`` are taken over ``U(x)`` in that order, so ``x_min`` is
    the largest label covering ``x`` and ``x_max`` the smallest.
    """

    upper_covers: dict[int, VertexSet]
    levels: LevelDecomposition
    x_min: dict[int, int]
    x_max: dict[int, int]

    def level_order(self, i: int) -> VertexSet:
        """Elements of level ``i`` listed from least to greatest under ``<_i``."""
        return tuple(sorted(self.levels.levels[i], reverse=True))

    @staticmethod
    def precedes_or_equal(a: int, b: int) -> bool:
        """``a <=_i b`` for two elements of the same level."""
        return a >= b

    def min_cover(self, x: int) -> int:
        if x not in self.x_min:
            raise KeyError(f"element {x} has no upper covers")
        return self.x_min[x]

    def max_cover(self, x: int) -> int:
        if x not in self.x_max:
            raise KeyError(f"element {x} has no upper covers")
        return self.x_max[x]


def cover_data(p: Poset, normalized: Realizer) -> CoverData:
    if normalized.l1 != identity(normalized.n):
        raise ValueError("cover_data needs a realizer whose first order is the identity")
    if poset_from_realizer(normalized) != p:
        raise ValueError("realizer does not realize the given poset")
    levels = heights(p)
    if not levels.pure:
        raise NotPureError("cover data is defined for pure posets only")
    up: dict[int, list[int]] = {x: [] for x in p.elements}
    for x, y in p.covers():
        up[x].append(y)
    upper = {x: tuple(sorted(ys)) for x, ys in up.items()}
    x_min = {x: max(ys) for x, ys in upper.items() if ys}
    x_max = {x: min(ys) for x, ys in upper.items() if ys}
    return CoverData(upper, levels, x_min, x_max)


def maximal_chains(p: Poset) -> list[VertexSet]:
    """All maximal chains, each listed bottom to top, in lexicographic order."""
    up: dict[int, list[int]] = {x: [] for x in p.elements}
    for x, y in p.covers():
        up[x].append(y)
    minimal = [x for x in p.elements if not p.lt[:, x - 1].any()]
    out: list[VertexSet] = []

    def walk(path: list[int]) -> None:
        nxt = up[path[-1]]
        if not nxt:
            out.append(tuple(path))
            return
        for y in nxt:
            path.append(y)
            walk(path)
            path.pop()

    for m in minimal:
        walk([m])
    return sorted(out)


def hasse_dot(p: Poset, name: str = "P") -> str:
    """DOT text of the Hasse diagram, one ``rank=same`` group per level."""
    levels = heights(p)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, level in enumerate(levels.levels):
        nodes = " ".join(f"{v};" for v in level)
        lines.append(f"  {{ rank=same; {nodes} }}  // height {i}")
    for x, y in p.covers():
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {i} -- {j};" for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"

