"""Reduced simplicial homology and the Reisner test for Cohen-Macaulayness.

A complex is stored by its facets. Two degenerate complexes are kept apart:
the void complex has no faces at all (``facets == ()``), while the
empty-face-only complex ``{∅}`` has ``facets == ((),)``, dimension -1 and
reduced homology equal to the field in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .graph import Graph, VertexSet, maximal_independent_sets
from .linalg import matrix_rank, parse_field
from .poset import Poset, maximal_chains

DEFAULT_FACE_CAP = 1 << 20
DEFAULT_FIELDS = ("F2", "Q")


class FaceCapExceeded(ValueError):
    pass


def _maximal_only(faces: Iterable[Sequence[int]]) -> tuple[VertexSet, ...]:
    sets = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f))
    keep: list[VertexSet] = []
    for f in sets:
        fs = set(f)
        if not any(fs <= set(k) for k in keep):
            keep.append(f)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[VertexSet, ...]

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        return cls(n, _maximal_only(faces))

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and, by convention, -2 for the void complex."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def is_void(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def contains(self, face: Iterable[int]) -> bool:
        fs = set(face)
        return any(fs <= set(f) for f in self.facets)

    def faces(self, cap: int = DEFAULT_FACE_CAP) -> list[VertexSet]:
        """All faces, the empty face included, in lexicographic order."""
        out: set[VertexSet] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                for s in combinations(f, k):
                    out.add(s)
            if len(out) > cap:
                raise FaceCapExceeded(f"more than {cap} faces")
        return sorted(out)

    def f_vector(self, cap: int = DEFAULT_FACE_CAP) -> dict[int, int]:
        """Face counts keyed by dimension, from -1 upward."""
        counts: dict[int, int] = {}
        for s in self.faces(cap):
            counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
        return counts


def full_simplex(vertices: Sequence[int]) -> SimplicialComplex:
    return SimplicialComplex(max(vertices, default=0), (tuple(sorted(vertices)),))


def independence_complex(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets; the zero-vertex graph gives ``{∅}``."""
    if g.n == 0:
        return SimplicialComplex(0, ((),))
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def order_complex(p: Poset) -> SimplicialComplex:
    """Facets are the maximal chains, each stored as a sorted label tuple."""
    if p.n == 0:
        return SimplicialComplex(0, ((),))
    return SimplicialComplex(p.n, tuple(sorted(tuple(sorted(c)) for c in maximal_chains(p))))


def link(c: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    face = set(face)
    if not c.contains(face):
        raise ValueError(f"{tuple(sorted(face))} is not a face of the complex")
    return SimplicialComplex.from_faces(
        c.n, (tuple(v for v in f if v not in face) for f in c.facets if face <= set(f)))


def boundary_matrices(c: SimplicialComplex, cap: int = DEFAULT_FACE_CAP
                      ) -> tuple[dict[int, list[VertexSet]], dict[int, np.ndarray]]:
    """Faces by dimension and the signed boundary maps ``∂_k : C_k -> C_{k-1}``.

    ``∂_0`` sends every vertex to the empty face, which is what makes the
    resulting homology reduced.
    """
    by_dim: dict[int, list[VertexSet]] = {}
    for s in c.faces(cap):
        by_dim.setdefault(len(s) - 1, []).append(s)
    bd: dict[int, np.ndarray] = {}
    for k in sorted(by_dim):
        if k < 0:
            continue
        lower = by_dim.get(k - 1, [])
        index = {f: i for i, f in enumerate(lower)}
        mat = np.zeros((len(lower), len(by_dim[k])), dtype=np.int64)
        for j, s in enumerate(by_dim[k]):
            for i in range(len(s)):
                mat[index[s[:i] + s[i + 1:]], j] = -1 if i % 2 else 1
        bd[k] = mat
    return by_dim, bd


def check_boundary_squares(bd: dict[int, np.ndarray]) -> bool:
    """``∂_k ∘ ∂_{k+1} = 0`` over the integers, hence over every field."""
    return all(not (bd[k] @ bd[k + 1]).any() for k in bd if k + 1 in bd)


class HomologyProfile(NamedTuple):
    field: str
    ranks: dict[int, int]

    def euler_from_ranks(self) -> int:
        return sum((-1) ** k * r for k, r in self.ranks.items())


def reduced_euler_characteristic(c: SimplicialComplex, cap: int = DEFAULT_FACE_CAP) -> int:
    return sum((-1) ** k * f for k, f in c.f_vector(cap).items())


def reduced_homology_ranks(c: SimplicialComplex, field: str = "F2",
                           cap: int = DEFAULT_FACE_CAP, check: bool = True) -> HomologyProfile:
    """Ranks of reduced homology in dimensions -1..dim over ``field``.

    ``rank H_k = f_k - rank ∂_k - rank ∂_{k+1}``, computed with exact
    arithmetic. With ``check`` the boundary maps are verified to compose to
    zero and the Euler characteristic identity is confirmed.
    """
    field = parse_field(field)
    by_dim, bd = boundary_matrices(c, cap)
    if check and not check_boundary_squares(bd):
        raise AssertionError("boundary maps do not compose to zero")
    rk = {k: matrix_rank(m, field) for k, m in bd.items()}
    ranks = {k: len(by_dim[k]) - rk.get(k, 0) - rk.get(k + 1, 0) for k in sorted(by_dim)}
    prof = HomologyProfile(field, ranks)
    if check:
        chi = sum((-1) ** k * len(f) for k, f in by_dim.items())
        if chi != prof.euler_from_ranks():
            raise AssertionError("Euler characteristic mismatch")
    return prof


@lru_cache(maxsize=1 << 14)
def _low_homology(facets: tuple[VertexSet, ...], field: str) -> tuple[int, ...]:
    """Reduced ranks below the top dimension, keyed by relabel-free facets."""
    c = SimplicialComplex(0, facets)
    prof = reduced_homology_ranks(c, field, check=True)
    return tuple(prof.ranks.get(k, 0) for k in range(-1, c.dim))


def _canonical_facets(c: SimplicialComplex) -> tuple[VertexSet, ...]:
    verts = sorted({v for f in c.facets for v in f})
    index = {v: i + 1 for i, v in enumerate(verts)}
    return tuple(sorted(tuple(index[v] for v in f) for f in c.facets))


class ReisnerWitness(NamedTuple):
    face: VertexSet
    dimension: int
    field: str

    def to_dict(self) -> dict:
        return {"face": list(self.face), "dimension": self.dimension, "field": self.field}


def reisner_cm(c: SimplicialComplex, fields: Sequence[str] = DEFAULT_FIELDS,
               cap: int = DEFAULT_FACE_CAP) -> tuple[bool, ReisnerWitness | None]:
    """Reisner's criterion over each listed field.

    CM iff for every face σ, ∅ included, the link of σ has vanishing reduced
    homology below its own dimension. The witness is the first failure with
    faces scanned in lexicographic order, then fields in the given order.
    """
    fields = [parse_field(f) for f in fields]
    if c.is_void():
        return True, None
    for face in c.faces(cap):
        lk = link(c, face)
        canon = _canonical_facets(lk)
        for field in fields:
            low = _low_homology(canon, field)
            for k, r in zip(range(-1, lk.dim), low):
                if r:
                    return False, ReisnerWitness(face, k, field)
    return True, None


def oracle_is_cm_graph(g: Graph, fields: Sequence[str] = DEFAULT_FIELDS,
                       cap: int = DEFAULT_FACE_CAP) -> bool:
    return reisner_cm(independence_complex(g), fields, cap)[0]
