"""Graph corpora: labeled enumeration, isomorphism-class atlas, random chordal graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, bits


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices 0..n-1, one per edge mask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k in bits(mask):
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def atlas_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class on exactly n <= 7 vertices."""
    import networkx as nx

    if not 0 <= n <= 7:
        raise ValueError("the graph atlas covers 0..7 vertices")
    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == n:
            out.append(Graph.from_edges(n, H.edges()))
    return out


def random_chordal(n: int, density: float = 0.5, seed: int | random.Random | None = None) -> Graph:
    """A connected chordal graph grown one vertex at a time.

    Vertex k attaches to a nonempty clique of the current graph: a random
    anchor plus each of the anchor's neighbours, in random order, that keeps
    the set a clique, taken with probability ``density``.  The insertion
    order reversed is a perfect elimination order.  ``density=1`` gives K_n.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    adj = [0] * n
    for k in range(1, n):
        anchor = rng.randrange(k)
        clique = 1 << anchor
        nbrs = list(bits(adj[anchor]))
        rng.shuffle(nbrs)
        for w in nbrs:
            if clique & ~adj[w] == 0 and rng.random() < density:
                clique |= 1 << w
        for w in bits(clique):
            adj[w] |= 1 << k
        adj[k] = clique
    return Graph(n, tuple(adj))


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_complex(rng: random.Random, max_n: int = 12, max_facets: int = 20):
    """Random facet list (reduced) over up to ``max_n`` vertices."""
    from .complex import SimplicialComplex

    n = rng.randint(1, max_n)
    count = rng.randint(1, max_facets)
    sets = [rng.getrandbits(n) for _ in range(count)]
    return SimplicialComplex.generated_by(n, sets)
