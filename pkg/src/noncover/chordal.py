"""Chordality, simplicial vertices and the layered simplicial vertex order."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, bits, is_connected


class NotChordalError(GraphError):
    pass


def _is_clique(G: Graph, S: int) -> bool:
    return all((S & ~(1 << v)) & ~G.adj[v] == 0 for v in bits(S))


def is_simplicial(G: Graph, v: int, within: int | None = None) -> bool:
    """Whether ``v`` is simplicial in ``G[within]`` (whole graph by default)."""
    nb = G.adj[v] if within is None else G.adj[v] & within
    return _is_clique(G, nb)


def simplicial_vertices(G: Graph, within: int | None = None) -> int:
    S = G.full if within is None else within
    out = 0
    for v in bits(S):
        if is_simplicial(G, v, S):
            out |= 1 << v
    return out


def lex_bfs(G: Graph) -> list[int]:
    """Lexicographic breadth-first search order (partition refinement)."""
    parts = [list(range(G.n))] if G.n else []
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        refined = []
        for part in parts:
            inside = [u for u in part if G.adj[v] >> u & 1]
            outside = [u for u in part if not G.adj[v] >> u & 1]
            refined += [p for p in (inside, outside) if p]
        parts = refined
    return order


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    """Each vertex's neighbours appearing later in ``order`` form a clique."""
    later = G.full
    for v in order:
        later &= ~(1 << v)
        if not _is_clique(G, G.adj[v] & later):
            return False
    return True


def is_chordal(G: Graph) -> bool:
    return is_perfect_elimination_order(G, lex_bfs(G)[::-1])


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def dirac_pair(G: Graph) -> tuple[int, int] | None:
    """Two non-adjacent simplicial vertices, or None for a complete graph."""
    if not is_chordal(G):
        raise NotChordalError("dirac_pair needs a chordal graph")
    if is_complete(G):
        return None
    simp = list(bits(simplicial_vertices(G)))
    for i, u in enumerate(simp):
        for v in simp[i + 1:]:
            if not G.has_edge(u, v):
                return u, v
    raise AssertionError("chordal non-complete graph without a non-adjacent simplicial pair")


@dataclass(frozen=True)
class VertexOrder:
    """A linear order on vertices; ``perm[k]`` is the vertex of rank ``k``.

    ``layers[i]`` lists the members of the (i+1)-th peeled layer by increasing
    rank; v_1 (``perm[0]``) belongs to no layer.
    """

    perm: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation of 0..n-1")
        rank = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            rank[v] = k
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def natural(cls, n: int) -> VertexOrder:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def offsets(self) -> list[int]:
        """t_i = total size of the layers peeled before layer i."""
        out, t = [], 0
        for layer in self.layers:
            out.append(t)
            t += len(layer)
        return out

    def precedes(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]

    def to_ranks(self, mask: int) -> int:
        """Re-express a vertex bitmask with bit k standing for the rank-k vertex."""
        out = 0
        for v in bits(mask):
            out |= 1 << self.rank[v]
        return out

    def from_ranks(self, mask: int) -> int:
        out = 0
        for k in bits(mask):
            out |= 1 << self.perm[k]
        return out

    def min(self, mask: int) -> int:
        """The ≺-least vertex of a nonempty set."""
        return min(bits(mask), key=self.rank.__getitem__)

    def to_json(self, G: Graph) -> dict:
        return {
            "perm": [G.labels[v] for v in self.perm],
            "layers": [[G.labels[v] for v in layer] for layer in self.layers],
            "offsets": self.offsets,
        }


def layered_vertex_order(G: Graph, seed: int | None = None,
                       rng: random.Random | None = None) -> VertexOrder:
    """Layered simplicial order: v_1 a simplicial vertex, then peel simplicial layers.

    Layer U_i is every simplicial vertex of the residual graph except v_1; it
    takes the highest free positions.  ``seed`` picks v_1 (default: least
    label among simplicial vertices).  Inside a layer, labels descend from the
    top position unless ``rng`` is given, which shuffles the layer instead.
    """
    if not is_chordal(G):
        raise NotChordalError("layered order needs a chordal graph")
    if not is_connected(G):
        raise GraphError("layered order needs a connected graph")
    if G.n == 0:
        return VertexOrder(())
    simp = simplicial_vertices(G)
    if seed is None:
        seed = min(bits(simp), key=G.labels.__getitem__)
    elif not simp >> seed & 1:
        raise GraphError(f"seed vertex {G.labels[seed]} is not simplicial")
    perm = [0] * G.n
    perm[0] = seed
    top = G.n - 1
    residual = G.full
    layers = []
    while residual != 1 << seed:
        layer = simplicial_vertices(G, residual) & ~(1 << seed)
        if not layer:
            raise AssertionError("empty layer in a connected chordal residual")
        members = sorted(bits(layer), key=G.labels.__getitem__, reverse=True)
        if rng is not None:
            rng.shuffle(members)
        for v in members:
            perm[top] = v
            top -= 1
        layers.append(tuple(reversed(members)))
        residual &= ~layer
    assert top == 0
    return VertexOrder(tuple(perm), tuple(layers))


def simplicial_seeds(G: Graph) -> list[int]:
    return list(bits(simplicial_vertices(G)))


def verify_order_properties(G: Graph, order: VertexOrder | Sequence[int]) -> bool:
    """(i) v_1 simplicial in G; (ii) each v_i simplicial in its prefix; (iii) prefixes connected."""
    perm = order.perm if isinstance(order, VertexOrder) else tuple(order)
    if sorted(perm) != list(range(G.n)):
        return False
    if G.n == 0:
        return True
    if not is_simplicial(G, perm[0]):
        return False
    prefix = 0
    for v in perm:
        prefix |= 1 << v
        if not is_simplicial(G, v, prefix):
            return False
        # v joins the connected prefix iff it has an earlier neighbour
        if prefix != 1 << v and not G.adj[v] & prefix:
            return False
    return True
