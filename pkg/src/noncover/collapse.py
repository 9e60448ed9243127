"""Elementary d-collapses, a backtracking collapse search, and certificate replay."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complex import SimplicialComplex, subsets
from .graph import bits, mask_of

FOUND, REFUTED, BUDGET = "found", "refuted", "budget"


class CollapseError(ValueError):
    pass


@dataclass(frozen=True)
class CollapseCertificate:
    d: int
    steps: tuple[tuple[int, int], ...]   # (free face, its unique facet)

    def to_json(self, labels=None) -> dict:
        def lab(m):
            return [labels[v] for v in bits(m)] if labels else [v + 1 for v in bits(m)]
        return {"d": self.d, "steps": [[lab(s), lab(t)] for s, t in self.steps]}

    @classmethod
    def from_json(cls, data: dict, labels=None) -> CollapseCertificate:
        index = {x: i for i, x in enumerate(labels)} if labels else None

        def unlab(xs):
            return mask_of(index[x] if index else x - 1 for x in xs)
        return cls(int(data["d"]), tuple((unlab(s), unlab(t)) for s, t in data["steps"]))


@dataclass
class CollapseOutcome:
    status: str
    certificate: CollapseCertificate | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _candidates(facet: int, d: int):
    members = list(bits(facet))
    if d >= len(members):
        yield from subsets(facet)
        return
    for k in range(d + 1):
        for combo in combinations(members, k):
            yield mask_of(combo)


def _free_pairs(facets: tuple[int, ...], d: int) -> list[tuple[int, int]]:
    out = []
    for t, tau in enumerate(facets):
        others = facets[:t] + facets[t + 1:]
        for s in _candidates(tau, d):
            if not any(s & ~F == 0 for F in others):
                out.append((s, tau))
    return out


def free_faces(K: SimplicialComplex, d: int) -> list[tuple[int, int]]:
    """Pairs (s, tau): face s with |s| <= d lying in exactly one facet tau.

    Sorted by |s|, then by the label lists of s and tau.
    """
    pairs = _free_pairs(K.facets, d)
    pairs.sort(key=lambda p: (p[0].bit_count(), K.render(p[0]), K.render(p[1])))
    return pairs


def _collapse(facets: tuple[int, ...], s: int, tau: int) -> tuple[int, ...]:
    others = tuple(F for F in facets if F != tau)
    fresh = [tau & ~(1 << v) for v in bits(s)]
    fresh = [c for c in fresh if not any(c & ~F == 0 for F in others)]
    return tuple(sorted(others + tuple(fresh)))


def elementary_collapse(K: SimplicialComplex, s: int) -> SimplicialComplex:
    """Remove the free face ``s`` and every face containing it."""
    holders = [F for F in K.facets if s & ~F == 0]
    if len(holders) != 1:
        raise CollapseError(f"{K.render(s)} is not free (lies in {len(holders)} facets)")
    return SimplicialComplex(K.n, _collapse(K.facets, s, holders[0]), K.labels)


def find_collapse_sequence(K: SimplicialComplex, d: int, node_budget: int = 10**7) -> CollapseOutcome:
    """Depth-first search over elementary d-collapses with a memo of dead complexes.

    REFUTED means the whole reachable space was exhausted; BUDGET means the
    search stopped early and nothing is known.
    """
    if d < 0:
        return CollapseOutcome(REFUTED)
    start = tuple(sorted(K.facets))
    if not start:
        return CollapseOutcome(FOUND, CollapseCertificate(d, ()))

    def moves(state):
        pairs = _free_pairs(state, d)
        pairs.sort(key=lambda p: (p[0].bit_count(), K.render(p[0]), K.render(p[1])))
        return iter(pairs)

    dead: set[tuple[int, ...]] = set()
    stack = [(start, moves(start))]
    path: list[tuple[int, int]] = []
    nodes = 1
    while stack:
        state, it = stack[-1]
        for s, tau in it:
            nxt = _collapse(state, s, tau)
            if not nxt:
                path.append((s, tau))
                return CollapseOutcome(FOUND, CollapseCertificate(d, tuple(path)), nodes)
            if nxt in dead:
                continue
            nodes += 1
            if nodes > node_budget:
                return CollapseOutcome(BUDGET, None, nodes)
            path.append((s, tau))
            stack.append((nxt, moves(nxt)))
            break
        else:
            dead.add(state)
            stack.pop()
            if path:
                path.pop()
    return CollapseOutcome(REFUTED, None, nodes)


@dataclass
class CertificateCheck:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(K: SimplicialComplex, cert: CollapseCertificate) -> CertificateCheck:
    """Replay the steps on an explicit face set, independently of the search code."""
    faces = set()
    for F in K.facets:
        members = [v for v in range(K.n) if F >> v & 1]
        for k in range(len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, k))
    for step, (s_mask, t_mask) in enumerate(cert.steps):
        s = frozenset(v for v in range(K.n) if s_mask >> v & 1)
        t = frozenset(v for v in range(K.n) if t_mask >> v & 1)
        if len(s) > cert.d:
            return CertificateCheck(False, step, f"|face| = {len(s)} exceeds d = {cert.d}")
        if s not in faces:
            return CertificateCheck(False, step, "face already removed or never present")
        above = [f for f in faces if s <= f]
        maximal = [f for f in above if not any(f < g for g in above)]
        if maximal != [t]:
            return CertificateCheck(False, step, "face is not free in the stated facet")
        faces = {f for f in faces if not s <= f}
    if faces:
        return CertificateCheck(False, len(cert.steps), "complex not void after the last step")
    return CertificateCheck(True)
