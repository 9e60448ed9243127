"""Simplicial complexes stored as ordered facet lists over a bitmask ground set."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, bits, mask_of
from .domination import maximal_independent_sets


class ComplexError(ValueError):
    pass


def subsets(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, from ``mask`` itself down to the empty set."""
    s = mask
    while True:
        yield s
        if not s:
            return
        s = (s - 1) & mask


def reduce_facets(sets: Iterable[int]) -> tuple[int, ...]:
    """Keep the inclusion-maximal sets, first occurrence order, no duplicates."""
    sets = list(dict.fromkeys(sets))
    return tuple(s for s in sets if not any(s != t and s & ~t == 0 for t in sets))


class SimplicialComplex:
    """Facets are mutually incomparable bitmasks; an empty facet tuple is the void complex.

    ``{∅}`` (facets ``(0,)``) is a different, nonvoid complex.  Equality ignores
    facet order; code that depends on the order (mes) reads ``facets`` directly.
    """

    __slots__ = ("n", "facets", "labels")

    def __init__(self, n: int, facets: Iterable[int], labels: tuple[int, ...] = ()):
        self.n = n
        self.facets = tuple(facets)
        self.labels = tuple(labels) or tuple(range(1, n + 1))
        full = (1 << n) - 1
        for i, F in enumerate(self.facets):
            if F < 0 or F & ~full:
                raise ComplexError(f"facet {F:#b} leaves the ground set of size {n}")
            for G in self.facets[i + 1:]:
                if F & ~G == 0 or G & ~F == 0:
                    raise ComplexError("facets must be mutually incomparable and distinct")

    @classmethod
    def generated_by(cls, n: int, sets: Iterable[int], labels=()) -> SimplicialComplex:
        return cls(n, reduce_facets(sets), labels)

    @classmethod
    def void(cls, n: int, labels=()) -> SimplicialComplex:
        return cls(n, (), labels)

    @classmethod
    def simplex(cls, n: int, labels=()) -> SimplicialComplex:
        return cls(n, ((1 << n) - 1,), labels)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def dim(self) -> int:
        """Largest face dimension; -1 for {∅}; -2 for the void complex."""
        return max((F.bit_count() for F in self.facets), default=-1) - 1

    def key(self) -> tuple[int, tuple[int, ...]]:
        return self.n, tuple(sorted(self.facets))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash((self.n, frozenset(self.facets)))

    def __contains__(self, face: int) -> bool:
        return is_face(self, face)

    def render(self, mask: int) -> list[int]:
        return [self.labels[i] for i in bits(mask)]

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        body = ", ".join("{" + ",".join(map(str, self.render(F))) + "}" for F in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"


def is_face(K: SimplicialComplex, s: int) -> bool:
    return any(s & ~F == 0 for F in K.facets)


def first_facet(K: SimplicialComplex, s: int) -> int:
    """Index of the first facet containing ``s``, or -1 if ``s`` is not a face."""
    for i, F in enumerate(K.facets):
        if s & ~F == 0:
            return i
    return -1


def enumerate_faces(K: SimplicialComplex) -> Iterator[int]:
    """Each face exactly once, charged to the first facet that contains it."""
    for i, F in enumerate(K.facets):
        earlier = K.facets[:i]
        for s in subsets(F):
            if not any(s & ~E == 0 for E in earlier):
                yield s


def f_vector(K: SimplicialComplex) -> list[int]:
    """f[k+1] = number of k-dimensional faces, starting with the empty face."""
    counts = [0] * (K.n + 2)
    for s in enumerate_faces(K):
        counts[s.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts if not K.is_void else []


def face_table(K: SimplicialComplex) -> bytearray:
    """Indicator over all 2^n subsets of the ground set."""
    table = bytearray(1 << K.n)
    for F in K.facets:
        for s in subsets(F):
            table[s] = 1
    return table


def induced_subcomplex(K: SimplicialComplex, S: int) -> SimplicialComplex:
    """Faces of K contained in S, on the same ground set."""
    if K.is_void:
        return K
    return SimplicialComplex.generated_by(K.n, (F & S for F in K.facets), K.labels)


def is_cone(K: SimplicialComplex) -> bool:
    """Some vertex lies in every facet (all reduced homology vanishes)."""
    if K.is_void:
        return False
    common = K.full
    for F in K.facets:
        common &= F
    return bool(common)


def noncover_complex(G: Graph, order=None) -> SimplicialComplex:
    """NC(G): facets are the edge complements, in ≺_f order when ``order`` is given."""
    if G.m == 0:
        return SimplicialComplex.void(G.n, G.labels)
    if order is None:
        edges = G.edges()
    else:
        from .mes import edge_lex_order
        edges = edge_lex_order(G, order)
    return SimplicialComplex(G.n, (G.full & ~(1 << u | 1 << v) for u, v in edges), G.labels)


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.n, maximal_independent_sets(G), G.labels)


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """D(K) = {s : complement of s is not a face of K}, via minimal non-faces."""
    table = face_table(K)
    full = K.full
    facets = []
    for s in range(1 << K.n):
        if table[s]:
            continue
        if all(table[s ^ (1 << v)] for v in bits(s)):
            facets.append(full & ~s)
    facets.sort(key=lambda F: [K.labels[v] for v in bits(F)])
    return SimplicialComplex(K.n, facets, K.labels)


# ---------------------------------------------------------------------------
# facet-list text format
# ---------------------------------------------------------------------------

def format_facets(K: SimplicialComplex) -> str:
    lines = [f"n {K.n}"]
    if K.is_void:
        lines.append("!void")
    for F in K.facets:
        lines.append(" ".join(map(str, K.render(F))) if F else "{}")
    return "\n".join(lines) + "\n"


def parse_facets(text: str) -> SimplicialComplex:
    """One facet per line (1-based labels); ``{}`` is the empty facet, ``!void`` the void complex."""
    n = None
    facets = []
    void = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "!void":
            void = True
            continue
        parts = line.split()
        if parts[0] == "n":
            n = int(parts[1])
            continue
        if line == "{}":
            facets.append([])
            continue
        try:
            facets.append([int(p) for p in parts])
        except ValueError:
            raise ComplexError(f"line {lineno}: bad facet {raw.strip()!r}") from None
    if void and facets:
        raise ComplexError("!void complex cannot list facets")
    if n is None:
        n = max((max(f) for f in facets if f), default=0)
    for f in facets:
        if any(not 1 <= x <= n for x in f):
            raise ComplexError(f"facet {f} leaves the ground set 1..{n}")
    return SimplicialComplex(n, [mask_of(x - 1 for x in f) for f in facets])
