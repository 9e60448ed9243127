"""Minimal exclusion sequences and the collapsibility bound they certify.

Given facets sigma_1, ..., sigma_m in a fixed order and a vertex order, the
minimal exclusion sequence of a face s records, for every facet preceding
the first facet that contains s, the least vertex of s missing from that
facet -- preferring vertices already recorded.  The number of distinct
recorded vertices, maximised over all faces, bounds the collapsibility
number of the complex.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

from .chordal import VertexOrder
from .complex import SimplicialComplex, noncover_complex, subsets
from .graph import Graph, GraphError, bits


class NotAFaceError(ValueError):
    pass


@dataclass(frozen=True)
class FacetOrder:
    """sigma_1 ≺_f ... ≺_f sigma_m as an explicit tuple (position 0 is sigma_1)."""

    facets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {F: i for i, F in enumerate(self.facets)})

    def index(self, facet: int) -> int:
        return self._index[facet]

    def __len__(self):
        return len(self.facets)

    @classmethod
    def of(cls, K: SimplicialComplex) -> FacetOrder:
        return cls(K.facets)


@dataclass(frozen=True)
class MesResult:
    face: int
    i: int                 # 1-based index of the first facet containing the face
    seq: tuple[int, ...]   # w_1, ..., w_{i-1}
    support: int           # M(face) as a bitmask

    @property
    def size(self) -> int:
        return self.support.bit_count()

    def to_json(self, labels: Sequence[int]) -> dict:
        return {
            "face": [labels[v] for v in bits(self.face)],
            "i": self.i,
            "mes": [labels[v] for v in self.seq],
            "M": [labels[v] for v in bits(self.support)],
        }


def edge_lex_order(G: Graph, order: VertexOrder) -> list[tuple[int, int]]:
    """Edges as (u, v) with u ≺ v, listed e_1, e_2, ..., e_m where e_1 is ≺_e-largest."""
    rk = order.rank
    es = [(u, v) if rk[u] < rk[v] else (v, u) for u, v in G.edges()]
    es.sort(key=lambda e: (rk[e[0]], rk[e[1]]), reverse=True)
    return es


def facet_order_nc(G: Graph, order: VertexOrder) -> FacetOrder:
    """sigma_i = V minus e_i for the edge order above."""
    if G.m == 0:
        raise GraphError("facet order of NC(G) needs at least one edge")
    return FacetOrder(tuple(G.full & ~(1 << u | 1 << v) for u, v in edge_lex_order(G, order)))


def ordered_noncover_complex(G: Graph, order: VertexOrder) -> tuple[SimplicialComplex, FacetOrder]:
    K = noncover_complex(G, order)
    return K, FacetOrder.of(K)


def _resolve(K: SimplicialComplex, forder: FacetOrder | None, order: VertexOrder | None):
    if forder is None:
        forder = FacetOrder.of(K)
    elif sorted(forder.facets) != sorted(K.facets):
        raise ValueError("facet order is not a permutation of the complex's facets")
    if order is None:
        order = VertexOrder.natural(K.n)
    return forder, order


def mes(face: int, K: SimplicialComplex, forder: FacetOrder | None = None,
        order: VertexOrder | None = None) -> MesResult:
    forder, order = _resolve(K, forder, order)
    used = 0
    seq = []
    for j, F in enumerate(forder.facets):
        if face & ~F == 0:
            return MesResult(face, j + 1, tuple(seq), used)
        excluded = face & ~F
        again = excluded & used
        w = order.min(again or excluded)
        seq.append(w)
        used |= 1 << w
    raise NotAFaceError(f"{K.render(face)} is not a face")


def _bound_sweep(K: SimplicialComplex, forder: FacetOrder, order: VertexOrder) -> tuple[int, int]:
    """(d(K), a face attaining it), working in rank coordinates so min is the low bit.

    Every subset of the facets' union is tried once; the mes loop itself
    finds the first containing facet, or rejects a non-face.
    """
    facets = [order.to_ranks(F) for F in forder.facets]
    union = 0
    for F in facets:
        union |= F
    best, witness = 0, 0
    for s in subsets(union):
        used = 0
        for F in facets:
            excluded = s & ~F
            if not excluded:
                size = used.bit_count()
                if size > best:
                    best, witness = size, s
                break
            again = excluded & used
            pick = again or excluded
            used |= pick & -pick
    return best, order.from_ranks(witness)


def collapsibility_bound(K: SimplicialComplex, forder: FacetOrder | None = None,
                         order: VertexOrder | None = None) -> int:
    """d(K) = max |M(s)| over all faces s."""
    if K.is_void:
        warnings.warn("d(K) of the void complex is taken to be 0", RuntimeWarning, stacklevel=2)
        return 0
    forder, order = _resolve(K, forder, order)
    return _bound_sweep(K, forder, order)[0]


def bound_witness(K: SimplicialComplex, forder: FacetOrder | None = None,
                  order: VertexOrder | None = None) -> tuple[int, int]:
    if K.is_void:
        return 0, 0
    forder, order = _resolve(K, forder, order)
    return _bound_sweep(K, forder, order)


def noncover_bound(G: Graph, order: VertexOrder) -> int:
    """d(NC(G)) under ≺ and the induced lexicographic facet order."""
    K, forder = ordered_noncover_complex(G, order)
    if K.is_void:
        return 0
    return _bound_sweep(K, forder, order)[0]


def mes_table(K: SimplicialComplex, forder: FacetOrder | None = None,
              order: VertexOrder | None = None) -> Iterator[MesResult]:
    """MesResult for every face, faces grouped by their first containing facet."""
    forder, order = _resolve(K, forder, order)
    for F in forder.facets:
        for s in sorted(subsets(F)):
            r = mes(s, K, forder, order)
            if forder.facets[r.i - 1] == F:
                yield r


# ---------------------------------------------------------------------------
# star normalisation
# ---------------------------------------------------------------------------

def _edges_within(G: Graph, S: int, order: VertexOrder) -> list[tuple[int, int]]:
    rk = order.rank
    out = []
    for u in bits(S):
        for v in bits(G.adj[u] & S):
            if rk[u] < rk[v]:
                out.append((u, v))
    out.sort(key=lambda e: (rk[e[0]], rk[e[1]]))
    return out


def _star_center(edges: list[tuple[int, int]]) -> int | None:
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    return common.pop() if len(common) == 1 else None


def is_star_normal(G: Graph, face: int, order: VertexOrder) -> bool:
    """The complement induces one star plus isolated vertices, centre ≺ every leaf."""
    edges = _edges_within(G, G.full & ~face, order)
    if not edges:
        return False
    if len(edges) == 1:
        return True
    a = _star_center(edges)
    if a is None:
        return False
    return all(order.precedes(a, u if v == a else v) for u, v in edges)


def _normalising_move(G: Graph, face: int, order: VertexOrder) -> int | None:
    """The vertex to add next, or None when the face is already star-normal."""
    edges = _edges_within(G, G.full & ~face, order)
    # two disjoint edges: add the smaller end of the ≺_e-earlier one
    for k, (a, b) in enumerate(edges):
        for c, d in edges[k + 1:]:
            if not {a, b} & {c, d}:
                return a
    if len(edges) == 1:
        return None
    a = _star_center(edges)
    if a is None:
        # triangle: add its least vertex
        return min({x for e in edges for x in e}, key=order.rank.__getitem__)
    leaves = sorted((u if v == a else v for u, v in edges), key=order.rank.__getitem__)
    if order.precedes(a, leaves[0]):
        return None
    b, c = leaves[0], leaves[1]
    return b if order.precedes(b, c) else c


def star_normalize(G: Graph, face: int, order: VertexOrder,
                   forder: FacetOrder | None = None) -> int:
    """Grow a face of NC(G) into a star-normal face with the same mes.

    ``forder`` is accepted for symmetry with ``mes``; the moves depend on ≺ only.
    """
    if not _edges_within(G, G.full & ~face, order):
        raise NotAFaceError("face is a cover of G, not a face of NC(G)")
    for _ in range(G.n + 1):
        x = _normalising_move(G, face, order)
        if x is None:
            return face
        face |= 1 << x
    raise AssertionError("star normalisation did not terminate")
