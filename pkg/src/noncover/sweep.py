"""Bound-check sweeps over labeled graph families or random chordal graphs."""

from __future__ import annotations

import hashlib
import json
import os
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .generate import all_labeled_graphs, random_chordal
from .graph import Graph
from .report import FAIL, AnalysisConfig, analyze, report_digest

EXHAUSTIVE, RANDOM_CHORDAL = "exhaustive", "random-chordal"


@dataclass
class SweepConfig:
    mode: str = EXHAUSTIVE
    n_values: tuple[int, ...] = (4,)
    count: int = 1000
    seed: int = 0
    density: float | None = None    # None: drawn per graph
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    output: str | None = None
    summary_only: bool = False
    threads: int | None = None


def parse_range(text: str) -> tuple[int, ...]:
    """'6' -> (6,), '4..6' -> (4, 5, 6)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return (int(text),)


def sweep_graphs(cfg: SweepConfig) -> Iterator[tuple[str, Graph]]:
    if cfg.mode == EXHAUSTIVE:
        for n in cfg.n_values:
            for k, G in enumerate(all_labeled_graphs(n)):
                yield f"n{n}#{k}", G
    elif cfg.mode == RANDOM_CHORDAL:
        rng = random.Random(cfg.seed)
        for k in range(cfg.count):
            n = rng.choice(cfg.n_values)
            density = cfg.density if cfg.density is not None else rng.uniform(0.1, 0.9)
            yield f"r{k}", random_chordal(n, density, rng.getrandbits(64))
    else:
        raise ValueError(f"unknown sweep mode {cfg.mode!r}")


def worker_count(requested: int | None = None) -> int:
    cap = os.environ.get("NONCOVER_THREADS")
    limit = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(requested or limit, limit))


def _analyze_job(job):
    gid, G, acfg = job
    rep = analyze(G, acfg)
    rep["id"] = gid
    return rep


def analyze_many(items: Iterable[tuple[str, Graph]], acfg: AnalysisConfig,
                 threads: int | None = None) -> Iterator[dict]:
    """Reports in input order; a process pool when more than one worker is allowed."""
    jobs = ((gid, G, acfg) for gid, G in items)
    workers = worker_count(threads)
    if workers == 1:
        yield from map(_analyze_job, jobs)
        return
    from multiprocessing import Pool
    with Pool(workers) as pool:
        yield from pool.imap(_analyze_job, jobs, chunksize=64)


class Summary:
    """Order-insensitive aggregation of per-graph verdicts."""

    def __init__(self):
        self.graphs = 0
        self.counts: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
        self.observed: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
        self.failures: list[dict] = []
        self.printed_independence_counterexamples: list[dict] = []
        self.budget_exhausted = 0
        self.digests: list[str] = []

    def add(self, rep: dict) -> None:
        self.graphs += 1
        for name, v in rep["verdicts"].items():
            self.counts[name][v["status"]] += 1
            if v["status"] == FAIL:
                self.failures.append({"id": rep.get("id"), "graph6": rep["graph"]["graph6"],
                                      "verdict": name, "reason": v.get("reason", "")})
        for name, v in rep["observations"].items():
            if isinstance(v, dict) and "status" in v:
                self.observed[name][v["status"]] += 1
            elif name == "independence_as_printed" and not v["holds"]:
                self.observed[name]["violated"] += 1
                if len(self.printed_independence_counterexamples) < 10:
                    self.printed_independence_counterexamples.append(
                        {"graph6": rep["graph"]["graph6"], "edges": rep["graph"]["edges"], **v})
            elif name == "fields_agree":
                self.observed[name][str(v)] += 1
        self.budget_exhausted += bool(rep["budget_exhausted"])
        self.digests.append(report_digest(rep))

    @property
    def any_failure(self) -> bool:
        return bool(self.failures)

    def exit_code(self) -> int:
        if self.any_failure:
            return 1
        return 3 if self.budget_exhausted else 0

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "verdicts": {k: dict(sorted(v.items())) for k, v in sorted(self.counts.items())},
            "observations": {k: dict(sorted(v.items())) for k, v in sorted(self.observed.items())},
            "failures": self.failures[:50],
            "printed_independence_counterexamples": self.printed_independence_counterexamples,
            "budget_exhausted": self.budget_exhausted,
            "digest": hashlib.sha256("".join(sorted(self.digests)).encode()).hexdigest(),
        }


def run_sweep(cfg: SweepConfig, out=None) -> Summary:
    """Analyze every graph of the configured family; stream JSON lines to ``out``."""
    summary = Summary()
    for rep in analyze_many(sweep_graphs(cfg), cfg.analysis, cfg.threads):
        summary.add(rep)
        if out is not None and not cfg.summary_only:
            out.write(json.dumps(rep, sort_keys=True) + "\n")
    return summary
