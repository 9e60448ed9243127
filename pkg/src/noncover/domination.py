"""Exact domination and independence domination numbers."""

from __future__ import annotations

import enum

from .graph import Graph, GraphError, bits, neighbors


class Semantics(str, enum.Enum):
    CLOSED = "closed"  # v is dominated by W iff v in W | N(W)
    OPEN = "open"      # A is dominated by W iff A is a subset of N(W)


class UndefinedDomination(GraphError):
    """No vertex set dominates the target under the requested semantics."""


def _reach(G: Graph, v: int, sem: Semantics) -> int:
    return G.adj[v] | (1 << v) if sem is Semantics.CLOSED else G.adj[v]


def dominated_by(G: Graph, W: int, sem: Semantics) -> int:
    out = neighbors(G, W)
    return out | W if sem is Semantics.CLOSED else out


def dominates(G: Graph, W: int, A: int, sem: Semantics = Semantics.OPEN) -> bool:
    return A & ~dominated_by(G, W, Semantics(sem)) == 0


def _coverable(G: Graph, target: int, k: int, sem: Semantics) -> bool:
    """Is there W with |W| <= k dominating ``target``?

    Branches on the dominators of the lowest undominated vertex.
    """
    if not target:
        return True
    if k == 0:
        return False
    x = (target & -target).bit_length() - 1
    cands = _reach(G, x, sem)  # reach is symmetric in both modes
    for v in sorted(bits(cands), key=lambda u: -(_reach(G, u, sem) & target).bit_count()):
        if _coverable(G, target & ~_reach(G, v, sem), k - 1, sem):
            return True
    return False


def _check_target(G: Graph, target: int, sem: Semantics) -> None:
    for v in bits(target):
        if not _reach(G, v, sem):
            raise UndefinedDomination(
                f"vertex {G.labels[v]} is isolated and cannot be dominated under {sem.value} semantics")


def min_dominating_size(G: Graph, target: int, sem: Semantics = Semantics.CLOSED, start: int = 0) -> int:
    """Least |W| dominating ``target``, searching sizes upward from ``start``."""
    sem = Semantics(sem)
    _check_target(G, target, sem)
    k = start
    while not _coverable(G, target, k, sem):
        k += 1
    return k


def greedy_dominating_set(G: Graph, target: int, sem: Semantics = Semantics.CLOSED) -> int:
    sem = Semantics(sem)
    _check_target(G, target, sem)
    W = 0
    while target:
        v = max(range(G.n), key=lambda u: (_reach(G, u, sem) & target).bit_count())
        W |= 1 << v
        target &= ~_reach(G, v, sem)
    return W


def domination_number(G: Graph, sem: Semantics = Semantics.CLOSED) -> int:
    """gamma(G). With OPEN semantics this is the total domination number."""
    if G.n == 0:
        raise GraphError("domination number of the empty graph is undefined")
    sem = Semantics(sem)
    upper = greedy_dominating_set(G, G.full, sem).bit_count()
    for k in range(1, upper):
        if _coverable(G, G.full, k, sem):
            return k
    return upper


def maximal_independent_sets(G: Graph) -> list[int]:
    """All inclusion-maximal independent sets (pivoting Bron-Kerbosch on the complement)."""
    full = G.full
    comp = [full & ~G.adj[v] & ~(1 << v) for v in range(G.n)]
    found = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            found.append(R)
            return
        pivot = max(bits(P | X), key=lambda u: (P & comp[u]).bit_count())
        for v in bits(P & ~comp[pivot]):
            expand(R | 1 << v, P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    expand(0, full, 0)
    return sorted(found, key=lambda s: [G.labels[v] for v in bits(s)])


def independence_domination_number(G: Graph, sem: Semantics = Semantics.OPEN) -> int:
    """Least k such that every independent set is dominated by at most k vertices.

    Only maximal independent sets need checking: a set dominating I also
    dominates every subset of I.  Raises UndefinedDomination under OPEN
    semantics when G has an isolated vertex.
    """
    if G.n == 0:
        raise GraphError("independence domination number of the empty graph is undefined")
    sem = Semantics(sem)
    best = 0
    for I in maximal_independent_sets(G):
        _check_target(G, I, sem)
        if not _coverable(G, I, best, sem):
            best = min_dominating_size(G, I, sem, start=best + 1)
    return best
