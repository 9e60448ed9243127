"""Reduced simplicial homology over GF(2) or the rationals."""

from __future__ import annotations

import enum
import random
from functools import lru_cache
from math import gcd

from .complex import SimplicialComplex, induced_subcomplex, is_cone, subsets
from .graph import bits


class Field(str, enum.Enum):
    GF2 = "gf2"
    RATIONAL = "rational"


class BettiVector(tuple):
    """Reduced Betti numbers; ``b[k]`` for k >= -1, zero past the top dimension."""

    def __getitem__(self, k):
        if isinstance(k, slice):
            return tuple.__getitem__(self, k)
        if k < -1:
            raise IndexError("reduced homology starts in dimension -1")
        return tuple.__getitem__(self, k + 1) if k + 1 < len(self) else 0

    def top_nonzero(self) -> int | None:
        nz = [k - 1 for k, b in enumerate(tuple(self)) if b]
        return nz[-1] if nz else None

    def to_json(self) -> dict:
        return {str(k - 1): b for k, b in enumerate(tuple(self))}

    def __repr__(self):
        return f"BettiVector({list(self)})"


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h not in basis:
                basis[h] = r
                break
            r ^= basis[h]
    return len(basis)


def _rank_rational(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination on sparse integer rows."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        pivot_row = rows.pop()
        if not pivot_row:
            continue
        col = min(pivot_row)
        p = pivot_row[col]
        rank += 1
        nxt = []
        for r in rows:
            x = r.get(col)
            if x:
                merged = {c: v * p for c, v in r.items()}
                for c, v in pivot_row.items():
                    merged[c] = merged.get(c, 0) - x * v
                merged = {c: v for c, v in merged.items() if v}
                g = 0
                for v in merged.values():
                    g = gcd(g, v)
                r = {c: v // g for c, v in merged.items()} if g > 1 else merged
            if r:
                nxt.append(r)
        rows = nxt
    return rank


@lru_cache(maxsize=1 << 18)
def _betti(facets: tuple[int, ...], field: Field) -> tuple[int, ...]:
    faces = set()
    for F in facets:
        faces.update(subsets(F))
    top = max(F.bit_count() for F in facets)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for s in faces:
        by_size[s.bit_count()].append(s)
    index = [{s: i for i, s in enumerate(sorted(level))} for level in by_size]
    # rank of the boundary map out of faces with k+1 vertices (k = 0..top-1)
    ranks = [0] * (top + 2)
    for size in range(1, top + 1):
        lower = index[size - 1]
        if field is Field.GF2:
            rows = []
            for s in by_size[size]:
                r = 0
                for v in bits(s):
                    r |= 1 << lower[s & ~(1 << v)]
                rows.append(r)
            ranks[size] = _rank_gf2(rows)
        else:
            rows = []
            for s in by_size[size]:
                row = {}
                for pos, v in enumerate(bits(s)):
                    row[lower[s & ~(1 << v)]] = -1 if pos & 1 else 1
                rows.append(row)
            ranks[size] = _rank_rational(rows)
    # dimension k <-> faces of size k+1
    return tuple(len(by_size[size]) - ranks[size] - ranks[size + 1] for size in range(top + 1))


def reduced_betti(K: SimplicialComplex, field: Field | str = Field.GF2) -> BettiVector:
    if K.is_void:
        return BettiVector(())
    return BettiVector(_betti(tuple(sorted(K.facets)), Field(field)))


def verify_vanishing(K: SimplicialComplex, lower: int, field: Field | str = Field.GF2) -> bool:
    """True iff every reduced Betti number in dimension >= ``lower`` is zero."""
    b = reduced_betti(K, field)
    return all(b[k] == 0 for k in range(max(lower, -1), len(b) - 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic: sum over faces (empty face included) of (-1)^dim."""
    total = 0
    seen = set()
    for F in K.facets:
        for s in subsets(F):
            if s not in seen:
                seen.add(s)
                total += -1 if s.bit_count() % 2 == 0 else 1
    return total


class LerayCapExceeded(ValueError):
    pass


def _top(K: SimplicialComplex, field: Field) -> int:
    """Least d with b_j = 0 for all j >= d, for one complex."""
    if K.is_void or is_cone(K):
        return 0
    t = reduced_betti(K, field).top_nonzero()
    return 0 if t is None else t + 1


def leray_number(K: SimplicialComplex, field: Field | str = Field.GF2, cap: int = 8,
                 samples: int | None = None, rng: random.Random | None = None) -> int:
    """Least d such that every induced subcomplex has vanishing homology from dimension d up.

    Exhaustive over all 2^n vertex subsets up to ``cap`` vertices.  Beyond the
    cap, pass ``samples`` to check that many random subsets instead; the
    result is then only a lower bound.
    """
    field = Field(field)
    if K.n > cap and samples is None:
        raise LerayCapExceeded(
            f"ground set of {K.n} vertices exceeds cap {cap}; pass samples=N for a sampled lower bound")
    if samples is None:
        pool = range(1 << K.n)
    else:
        rng = rng or random.Random(0)
        pool = [K.full] + [rng.getrandbits(K.n) for _ in range(samples)]
    best = 0
    for S in pool:
        best = max(best, _top(induced_subcomplex(K, S), field))
    return best
