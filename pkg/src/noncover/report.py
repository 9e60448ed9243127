"""Per-graph analysis: every quantity the bounds involve, plus verdicts."""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field

from .chordal import (VertexOrder, is_chordal, layered_vertex_order, simplicial_seeds,
                      verify_order_properties)
from .collapse import BUDGET, FOUND, find_collapse_sequence, verify_certificate
from .complex import alexander_dual, independence_complex, noncover_complex
from .domination import Semantics, UndefinedDomination, domination_number, independence_domination_number
from .graph import Graph, connected_components, isolated_vertices, to_graph6
from .homology import Field, leray_number, reduced_betti
from .mes import bound_witness, ordered_noncover_complex

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class AnalysisConfig:
    semantics: Semantics = Semantics.OPEN
    fields: tuple[Field, ...] = (Field.GF2,)
    order_seed: int | None = None       # 1-based label of v_1
    all_seeds: bool = False
    shuffles: int = 0
    shuffle_seed: int = 0
    collapse_budget: int = 10**7        # 0 disables the collapse search
    collapse_max_n: int = 8
    include_certificate: bool = False
    leray: bool = False
    leray_cap: int = 8


def _verdict(status: str, reason: str = "") -> dict:
    return {"status": status, "reason": reason} if reason else {"status": status}


def igamma_or_none(G: Graph, sem: Semantics) -> int | None:
    """iγ, or None when OPEN semantics leaves an isolated vertex undominatable."""
    try:
        return independence_domination_number(G, sem)
    except UndefinedDomination:
        return None


def _homology_verdicts(G: Graph, ig: int | None, betti_nc: dict, betti_i: dict) -> dict:
    """Vanishing above the bound for NC(G) and the corrected independence-complex vanishing.

    ``ig is None`` means no finite k dominates every independent set, so the
    claimed vanishing covers every dimension.
    """
    n = G.n
    out = {}
    if G.m == 0:
        out["nc_vanishing"] = _verdict(SKIP, "E(G) is empty: NC(G) is void")
    else:
        lower = -1 if ig is None else n - ig - 1
        bad = {f: [j for j in range(lower, n) if b[j]] for f, b in betti_nc.items()}
        bad = {f: js for f, js in bad.items() if js}
        out["nc_vanishing"] = _verdict(FAIL, f"nonzero NC homology at {bad}") if bad else _verdict(PASS)
    upper = n if ig is None else ig - 2
    bad = {f: [i for i in range(-1, upper + 1) if b[i]] for f, b in betti_i.items()}
    bad = {f: js for f, js in bad.items() if js}
    out["independence_vanishing"] = _verdict(FAIL, f"nonzero I(G) homology at {bad}") if bad else _verdict(PASS)
    return out


def _independence_as_printed(G: Graph, ig: int | None, betti_i: dict) -> dict:
    """The independence-complex vanishing read as 'for all i >= iγ - 2'."""
    if ig is None:
        return {"igamma": None, "holds": True, "nonzero_dims": {}}
    nz = {f: [i for i in range(ig - 2, G.n) if i >= -1 and b[i]] for f, b in betti_i.items()}
    nz = {f: js for f, js in nz.items() if js}
    return {"igamma": ig, "checked_from": ig - 2, "holds": not nz, "nonzero_dims": nz}


def candidate_orders(G: Graph, cfg: AnalysisConfig) -> list[VertexOrder]:
    if cfg.all_seeds:
        seeds = simplicial_seeds(G)
    elif cfg.order_seed is not None:
        seeds = [G.index_of(cfg.order_seed)]
    else:
        seeds = [None]
    orders = [layered_vertex_order(G, s) for s in seeds]
    rng = random.Random(cfg.shuffle_seed)
    for s in seeds:
        for _ in range(cfg.shuffles):
            orders.append(layered_vertex_order(G, s, rng))
    return orders


def analyze(G: Graph, cfg: AnalysisConfig | None = None) -> dict:
    cfg = cfg or AnalysisConfig()
    sem = Semantics(cfg.semantics)
    fields = tuple(Field(f) for f in cfg.fields)
    other = Semantics.CLOSED if sem is Semantics.OPEN else Semantics.OPEN
    timings = {}
    t0 = time.perf_counter()
    n = G.n
    comps = connected_components(G)
    iso = isolated_vertices(G)
    chordal = is_chordal(G)
    rep: dict = {
        "graph": {
            "n": n, "m": G.m,
            "edges": [[G.labels[u], G.labels[v]] for u, v in G.edges()],
            "edge_hash": G.edge_hash(),
            "graph6": to_graph6(G),
        },
        "chordal": chordal,
        "connected": len(comps) <= 1,
        "components": len(comps),
        "isolated": G.label_set(iso),
        "semantics": sem.value,
    }
    verdicts: dict = {}
    observations: dict = {}

    gamma = domination_number(G) if n else None
    ig = {s.value: igamma_or_none(G, s) for s in Semantics} if n else {"open": None, "closed": None}
    rep["gamma"] = gamma
    rep["igamma"] = ig
    ig_sel = ig[sem.value]
    bound = None if ig_sel is None else n - ig_sel - 1
    rep["bound"] = bound
    timings["domination"] = time.perf_counter() - t0

    if chordal and n:
        for s in (sem, other):
            key = "igamma_eq_gamma" if s is sem else f"igamma_eq_gamma[{s.value}]"
            target = verdicts if s is sem else observations
            if ig[s.value] is None:
                target[key] = _verdict(SKIP, "iγ undefined: isolated vertex under open semantics")
            elif ig[s.value] == gamma:
                target[key] = _verdict(PASS)
            else:
                target[key] = _verdict(FAIL, f"iγ={ig[s.value]} but γ={gamma}")

    # homology of NC(G) and I(G)
    t1 = time.perf_counter()
    nc = noncover_complex(G)
    ind = independence_complex(G)
    betti_nc = {f.value: reduced_betti(nc, f) for f in fields}
    betti_i = {f.value: reduced_betti(ind, f) for f in fields}
    rep["betti"] = {
        "nc": {f: b.to_json() for f, b in betti_nc.items()},
        "i": {f: b.to_json() for f, b in betti_i.items()},
    }
    if len(fields) > 1:
        agree = len({tuple(b) for b in betti_nc.values()}) == 1 and len({tuple(b) for b in betti_i.values()}) == 1
        observations["fields_agree"] = agree
    verdicts.update(_homology_verdicts(G, ig_sel, betti_nc, betti_i))
    alt = _homology_verdicts(G, ig[other.value], betti_nc, betti_i)
    observations.update({f"{k}[{other.value}]": v for k, v in alt.items()})
    observations["independence_as_printed"] = _independence_as_printed(G, ig_sel, betti_i)
    verdicts["duality"] = _verdict(PASS) if alexander_dual(ind) == nc else _verdict(FAIL, "D(I(G)) != NC(G)")
    timings["homology"] = time.perf_counter() - t1

    # the collapsibility bound under the layered order
    t2 = time.perf_counter()
    hyp = None
    if not chordal:
        hyp = "not chordal"
    elif iso:
        hyp = "has isolated vertices"
    elif len(comps) > 1:
        hyp = "disconnected (reported separately)"
    elif bound is None:
        hyp = "iγ undefined"
    rep["order"] = None
    rep["d_nc"] = None
    budget_hit = False
    if hyp is None:
        orders = candidate_orders(G, cfg)
        rep["order"] = orders[0].to_json(G)
        ds = []
        order_ok = True
        for o in orders:
            order_ok &= verify_order_properties(G, o)
            d, face = bound_witness(*ordered_noncover_complex(G, o), o)
            ds.append(d)
            if o is orders[0]:
                rep["d_nc"] = d
                rep["d_witness"] = G.label_set(face)
        if len(orders) > 1:
            rep["d_nc_all_orders"] = ds
        verdicts["order_properties"] = _verdict(PASS) if order_ok else _verdict(FAIL, "layered order violates (i)-(iii)")
        worst = max(ds)
        verdicts["bound_mes"] = (_verdict(PASS) if worst <= bound
                                 else _verdict(FAIL, f"d(NC)={worst} > {bound}"))
    else:
        verdicts["bound_mes"] = _verdict(SKIP, hyp)
    timings["mes"] = time.perf_counter() - t2

    t3 = time.perf_counter()
    want_collapse = cfg.collapse_budget > 0 and n <= cfg.collapse_max_n and bound is not None and G.m
    if hyp is None and want_collapse:
        K, _ = ordered_noncover_complex(G, orders[0])
        out = find_collapse_sequence(K, bound, cfg.collapse_budget)
        rep["collapse"] = {"d": bound, "status": out.status, "nodes": out.nodes}
        if out.status == FOUND:
            check = verify_certificate(K, out.certificate)
            rep["collapse"]["steps"] = len(out.certificate.steps)
            if cfg.include_certificate:
                rep["collapse"]["certificate"] = out.certificate.to_json(G.labels)
            verdicts["bound_collapse"] = (_verdict(PASS) if check
                                          else _verdict(FAIL, f"certificate rejected at step {check.failed_step}"))
        elif out.status == BUDGET:
            budget_hit = True
            verdicts["bound_collapse"] = _verdict(SKIP, "budget exhausted")
        else:
            verdicts["bound_collapse"] = _verdict(FAIL, f"not {bound}-collapsible")
    elif hyp == "disconnected (reported separately)" and want_collapse:
        out = find_collapse_sequence(noncover_complex(G), bound, cfg.collapse_budget)
        observations["collapse_disconnected"] = {"d": bound, "status": out.status}
        budget_hit |= out.status == BUDGET
        verdicts["bound_collapse"] = _verdict(SKIP, hyp)
    else:
        verdicts["bound_collapse"] = _verdict(SKIP, hyp or "collapse search disabled for this size")
    timings["collapse"] = time.perf_counter() - t3

    if cfg.leray and hyp is None:
        K = noncover_complex(G)
        if n <= cfg.leray_cap:
            rep["leray_nc"] = leray_number(K, fields[0], cfg.leray_cap)
            verdicts["leray"] = (_verdict(PASS) if rep["leray_nc"] <= bound
                                 else _verdict(FAIL, f"Leray number {rep['leray_nc']} > {bound}"))
        else:
            verdicts["leray"] = _verdict(SKIP, "ground set above Leray cap")

    rep["verdicts"] = verdicts
    rep["observations"] = observations
    rep["budget_exhausted"] = budget_hit
    timings["total"] = time.perf_counter() - t0
    rep["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return rep


def canonical_json(rep: dict) -> str:
    body = {k: v for k, v in rep.items() if k != "timings"}
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def report_digest(rep: dict) -> str:
    return hashlib.sha256(canonical_json(rep).encode()).hexdigest()


def failed(rep: dict) -> list[str]:
    return [k for k, v in rep["verdicts"].items() if v["status"] == FAIL]


def summarize_text(rep: dict) -> str:
    g = rep["graph"]
    lines = [
        f"n={g['n']} m={g['m']} chordal={rep['chordal']} connected={rep['connected']}",
        f"gamma={rep['gamma']} igamma(open)={rep['igamma']['open']} igamma(closed)={rep['igamma']['closed']}"
        f" [{rep['semantics']}] bound={rep['bound']} d(NC)={rep['d_nc']}",
    ]
    if rep.get("order"):
        lines.append(f"order={rep['order']['perm']} layers={rep['order']['layers']}")
    lines.append(f"betti NC={rep['betti']['nc']} I={rep['betti']['i']}")
    if "collapse" in rep:
        c = rep["collapse"]
        lines.append(f"collapse d={c['d']} status={c['status']} nodes={c['nodes']}")
    for k, v in rep["verdicts"].items():
        lines.append(f"  {k:<18} {v['status']}" + (f"  ({v['reason']})" if "reason" in v else ""))
    return "\n".join(lines)
