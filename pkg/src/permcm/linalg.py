"""Exact matrix rank over GF(2), GF(p) and the rationals."""

from __future__ import annotations

from typing import Sequence

import numpy as np

FIELDS = ("F2", "F3", "F5", "Q")
_CHAR = {"F2": 2, "F3": 3, "F5": 5, "Q": 0}


def parse_field(name: str) -> str:
    key = name.strip().upper()
    if key not in _CHAR:
        raise ValueError(f"unknown field {name!r}; expected one of {', '.join(FIELDS)}")
    return key


def characteristic(field: str) -> int:
    return _CHAR[parse_field(field)]


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank of a GF(2) matrix whose rows are packed into integers."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                rank += 1
                break
            row ^= pivots[top]
    return rank


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p), p prime, by row reduction on int64 residues."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        col = m[:, c].copy()
        col[rank] = 0
        m = (m - np.outer(col, m[rank])) % p
        rank += 1
    return rank


def rank_rational(a: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python integers."""
    m = [[int(x) for x in row] for row in a]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, rows):
            ri = m[i]
            f = ri[c]
            for j in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (pr[c] * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = pr[c]
        rank += 1
        if rank == rows:
            break
    return rank


def matrix_rank(a: np.ndarray, field: str) -> int:
    """Exact rank of an integer matrix read over ``field``."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    p = characteristic(field)
    if p == 2:
        return rank_gf2([sum(1 << int(j) for j in np.nonzero(row & 1)[0]) for row in a])
    if p:
        return rank_mod_p(a, p)
    return rank_rational(a.tolist())
