"""Finite simple graphs over dense vertex indices.

Vertex sets are plain Python ints used as bitmasks: bit ``i`` set means
vertex ``i`` is a member.  Internally vertices are ``0..n-1``; every text
format renders them 1-based through ``Graph.labels``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input or an invalid vertex reference."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour index >= n")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise GraphError("label map length differs from n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=()) -> Graph:
        """Build from 0-based index pairs. Loops and repeated edges are rejected."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"repeated edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` index pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label_set(self, mask: int) -> list[int]:
        return [self.labels[i] for i in bits(mask)]

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex label {label}") from None

    def mask_from_labels(self, labels: Iterable[int]) -> int:
        return mask_of(self.index_of(x) for x in labels)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` moved to index ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def edge_hash(self) -> str:
        text = ";".join(f"{self.labels[u]}-{self.labels[v]}" for u, v in self.edges())
        return hashlib.sha256(f"{self.n}|{text}".encode()).hexdigest()[:16]

    def __repr__(self):
        es = " ".join(f"{self.labels[u]}{self.labels[v]}" if self.n < 10 else
                      f"{self.labels[u]}-{self.labels[v]}" for u, v in self.edges())
        return f"Graph(n={self.n}, edges=[{es}])"


def _check(G: Graph, W: int) -> None:
    if W < 0 or W & ~G.full:
        raise GraphError(f"vertex set {W:#b} has members outside 0..{G.n - 1}")


def neighbors(G: Graph, W: int) -> int:
    """N(W): every vertex adjacent to some member of W. May intersect W."""
    _check(G, W)
    out = 0
    for w in bits(W):
        out |= G.adj[w]
    return out


def is_independent(G: Graph, S: int) -> bool:
    _check(G, S)
    return all(not (G.adj[v] & S) for v in bits(S))


def is_cover(G: Graph, W: int) -> bool:
    """True iff the complement of W is independent (W meets every edge)."""
    _check(G, W)
    return is_independent(G, G.full & ~W)


def induced_subgraph(G: Graph, S: int) -> Graph:
    """G[S], reindexed densely; ``labels`` keeps the original labels."""
    _check(G, S)
    keep = list(bits(S))
    pos = {v: i for i, v in enumerate(keep)}
    adj = tuple(mask_of(pos[u] for u in bits(G.adj[v] & S)) for v in keep)
    return Graph(len(keep), adj, tuple(G.labels[v] for v in keep))


def connected_components(G: Graph) -> list[int]:
    comps = []
    left = G.full
    while left:
        frontier = seen = left & -left
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= G.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def isolated_vertices(G: Graph) -> int:
    return mask_of(v for v in range(G.n) if not G.adj[v])


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (1-based), ``#`` comments and an optional ``n <count>`` header."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None or pairs:
                raise GraphError(f"line {lineno}: malformed or misplaced 'n' header")
            n = _int(parts[1], lineno)
            if n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 1 or v < 1:
            raise GraphError(f"line {lineno}: labels are 1-based")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        pairs.append((lineno, u, v))
    if n is None:
        n = max((max(u, v) for _, u, v in pairs), default=0)
    adj = [0] * n
    for lineno, u, v in pairs:
        if u > n or v > n:
            raise GraphError(f"line {lineno}: label exceeds n={n}")
        if adj[u - 1] >> (v - 1) & 1:
            raise GraphError(f"line {lineno}: repeated edge {u} {v}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: not an integer: {tok!r}") from None


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines += [f"{G.labels[u]} {G.labels[v]}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (optional ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= x < 64 for x in data):
        raise GraphError(f"invalid graph6 string {line!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise GraphError(f"graph6 body length mismatch for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    body = []
    acc = k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (G.adj[i] >> j & 1)
            k += 1
            if k == 6:
                body.append(acc)
                acc = k = 0
    if k:
        body.append(acc << (6 - k))
    return "".join(chr(x + 63) for x in head + body)


def read_graphs(text: str) -> list[Graph]:
    """Edge-list text, or one graph6 record per line when the first line looks like graph6."""
    stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if stripped and _looks_graph6(stripped[0]):
        return [parse_graph6(ln) for ln in stripped]
    return [parse_edge_list(text)]


def _looks_graph6(line: str) -> bool:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        return True
    return " " not in s and not s.lstrip("-").isdigit() and all(63 <= ord(c) <= 126 for c in s)
