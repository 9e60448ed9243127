"""Command-line driver.

Subcommands
-----------
analyze    full report for one graph (edge list or graph6 file)
sweep      bound checks over all labeled graphs or random chordal graphs
mes-dump   (face, i, mes, M) for every face of NC(G) as JSON lines
collapse   search for / replay a d-collapse certificate of NC(G)

Exit codes: 0 all pass, 1 a check failed, 2 usage or parse error,
3 a search budget ran out somewhere.

Usage examples
--------------
  noncover analyze graph.txt --json report.json
  noncover sweep --mode exhaustive --n 4..6 --summary-only
  noncover sweep --mode random-chordal --n 12 --count 1000 --seed 7
  noncover collapse graph.txt --d 1 > cert.json
  noncover collapse graph.txt --d 1 --check cert.json
"""

from __future__ import annotations

import argparse
import json
import sys

from .chordal import VertexOrder, layered_vertex_order
from .collapse import BUDGET, FOUND, CollapseCertificate, find_collapse_sequence, verify_certificate
from .complex import ComplexError, noncover_complex, parse_facets
from .domination import Semantics
from .graph import GraphError, read_graphs
from .homology import Field
from .mes import mes_table, ordered_noncover_complex
from .report import AnalysisConfig, analyze, failed, summarize_text
from .sweep import SweepConfig, parse_range, run_sweep


class UsageError(Exception):
    pass


def _load_graphs(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return read_graphs(text)


def _fields(value: str) -> tuple[Field, ...]:
    return (Field.GF2, Field.RATIONAL) if value == "both" else (Field(value),)


def _analysis_config(args) -> AnalysisConfig:
    return AnalysisConfig(
        semantics=Semantics(args.domination_semantics),
        fields=_fields(args.field),
        order_seed=getattr(args, "order_seed", None),
        all_seeds=args.all_seeds,
        shuffles=args.shuffles,
        collapse_budget=args.collapse_budget,
        collapse_max_n=args.collapse_max_n,
        include_certificate=getattr(args, "certificates", False),
        leray=args.leray,
    )


def cmd_analyze(args) -> int:
    cfg = _analysis_config(args)
    reports = [analyze(G, cfg) for G in _load_graphs(args.file)]
    for rep in reports:
        print(summarize_text(rep))
    if args.json:
        body = "\n".join(json.dumps(r, sort_keys=True, indent=None if len(reports) > 1 else 2) for r in reports)
        if args.json == "-":
            print(body)
        else:
            with open(args.json, "w") as fh:
                fh.write(body + "\n")
    if any(failed(r) for r in reports):
        return 1
    return 3 if any(r["budget_exhausted"] for r in reports) else 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        mode=args.mode,
        n_values=parse_range(args.n),
        count=args.count,
        seed=args.seed,
        density=args.density,
        analysis=_analysis_config(args),
        output=args.out,
        summary_only=args.summary_only,
        threads=args.threads,
    )
    if args.out:
        with open(args.out, "w") as fh:
            summary = run_sweep(cfg, fh)
    else:
        summary = run_sweep(cfg, None if args.summary_only else sys.stdout)
    print(json.dumps(summary.to_json(), indent=2, sort_keys=True),
          file=sys.stderr if (not args.out and not args.summary_only) else sys.stdout)
    return summary.exit_code()


def _order_for(G, label):
    return layered_vertex_order(G, None if label is None else G.index_of(label))


def cmd_mes_dump(args) -> int:
    for G in _load_graphs(args.file):
        order = _order_for(G, args.order_seed) if args.order == "layered" else VertexOrder.natural(G.n)
        K, forder = ordered_noncover_complex(G, order)
        if K.is_void:
            continue
        for r in mes_table(K, forder, order):
            print(json.dumps(r.to_json(G.labels)))
    return 0


def cmd_collapse(args) -> int:
    if args.facets:
        try:
            K = parse_facets(open(args.file).read())
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        graphs = _load_graphs(args.file)
        if len(graphs) != 1:
            raise UsageError("collapse expects a single graph")
        G = graphs[0]
        order = _order_for(G, args.order_seed)
        K = noncover_complex(G, order) if G.m else noncover_complex(G)
    if args.check:
        try:
            cert = CollapseCertificate.from_json(json.load(open(args.check)), K.labels)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read certificate: {exc}") from None
        check = verify_certificate(K, cert)
        print(json.dumps({"valid": check.ok, "failed_step": check.failed_step, "reason": check.reason}))
        return 0 if check else 1
    if args.d is None:
        raise UsageError("collapse needs --d unless --check is given")
    out = find_collapse_sequence(K, args.d, args.budget)
    result = {"d": args.d, "status": out.status, "nodes": out.nodes}
    if out.status == FOUND:
        result.update(out.certificate.to_json(K.labels))
    text = json.dumps(result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if out.status == BUDGET:
        return 3
    return 0 if out.status == FOUND else 1


def _add_analysis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--domination-semantics", choices=[s.value for s in Semantics], default="open")
    p.add_argument("--field", choices=["gf2", "rational", "both"], default="gf2")
    p.add_argument("--collapse-budget", type=int, default=10**7, help="0 disables the collapse search")
    p.add_argument("--collapse-max-n", type=int, default=8)
    p.add_argument("--all-seeds", action="store_true", help="try every simplicial vertex as v_1")
    p.add_argument("--shuffles", type=int, default=0, help="extra within-layer shuffles per seed")
    p.add_argument("--leray", action="store_true", help="also compute the Leray number of NC(G)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="noncover", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report for one graph file")
    p.add_argument("file")
    p.add_argument("--order-seed", type=int, help="1-based label of the first vertex v_1")
    p.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--certificates", action="store_true", help="embed the collapse certificate")
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="exhaustive or random sweep")
    p.add_argument("--mode", choices=["exhaustive", "random-chordal"], default="exhaustive")
    p.add_argument("--n", default="4", help="N or LO..HI")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float)
    p.add_argument("--out", help="JSON-lines output path")
    p.add_argument("--summary-only", action="store_true")
    p.add_argument("--threads", type=int)
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mes-dump", help="per-face minimal exclusion sequences of NC(G)")
    p.add_argument("file")
    p.add_argument("--order", choices=["layered", "natural"], default="layered")
    p.add_argument("--order-seed", type=int)
    p.set_defaults(func=cmd_mes_dump)

    p = sub.add_parser("collapse", help="find or check a d-collapse certificate")
    p.add_argument("file")
    p.add_argument("--d", type=int)
    p.add_argument("--check", metavar="CERT_JSON")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--facets", action="store_true", help="FILE is a facet list, not a graph")
    p.add_argument("--order-seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_collapse)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ComplexError) as exc:
        print(f"noncover: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
