import json
import random

import pytest

from conftest import make
from noncover.cli import main
from noncover.domination import Semantics
from noncover.generate import random_chordal
from noncover.graph import format_edge_list
from noncover.report import AnalysisConfig, analyze, canonical_json, failed, report_digest
from noncover.sweep import SweepConfig, parse_range, run_sweep


def write(tmp_path, G, name="g.txt"):
    p = tmp_path / name
    p.write_text(format_edge_list(G))
    return str(p)


def test_analyze_p4(tmp_path, capsys):
    path = write(tmp_path, make("12 23 34"))
    out = tmp_path / "r.json"
    assert main(["analyze", path, "--json", str(out), "--field", "both"]) == 0
    rep = json.loads(out.read_text())
    assert rep["gamma"] == 2 and rep["igamma"] == {"open": 2, "closed": 2}
    assert rep["bound"] == 1 and rep["d_nc"] == 1
    assert rep["collapse"]["status"] == "found"
    assert rep["betti"]["nc"]["gf2"] == rep["betti"]["nc"]["rational"]
    assert not failed(rep)
    assert "bound_mes" in capsys.readouterr().out


def test_analyze_cycle_skips_chordal_checks(tmp_path):
    rep = analyze(make("12 23 34 41"))
    assert not rep["chordal"]
    assert rep["verdicts"]["bound_mes"]["status"] == "skipped"
    assert rep["verdicts"]["nc_vanishing"]["status"] == "pass"
    path = write(tmp_path, make("12 23 34 41"))
    assert main(["analyze", path]) == 0


def test_analyze_k2_and_edgeless():
    rep = analyze(make("12"))
    assert rep["bound"] == 0 and rep["d_nc"] == 0
    rep = analyze(make("", n=3))
    assert rep["verdicts"]["nc_vanishing"]["status"] == "skipped"
    assert rep["igamma"]["open"] is None and rep["igamma"]["closed"] == 3


def test_printed_direction_recorded_for_p3():
    obs = analyze(make("12 23"))["observations"]["independence_as_printed"]
    assert obs["igamma"] == 1 and not obs["holds"]
    assert obs["nonzero_dims"] == {"gf2": [0]}


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("1 1\n")
    assert main(["analyze", str(p)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2


def test_mes_dump(tmp_path, capsys):
    path = write(tmp_path, make("12 23"))
    assert main(["mes-dump", path, "--order", "natural"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(rows) == 3
    by_face = {tuple(r["face"]): r for r in rows}
    assert by_face[(3,)]["mes"] == [3] and by_face[(3,)]["i"] == 2


def test_collapse_find_and_check(tmp_path, capsys):
    path = write(tmp_path, make("12 13 14"))
    cert = tmp_path / "cert.json"
    assert main(["collapse", path, "--d", "2", "--out", str(cert)]) == 0
    assert main(["collapse", path, "--check", str(cert)]) == 0
    assert json.loads(capsys.readouterr().out.strip().splitlines()[-1])["valid"]
    assert main(["collapse", path, "--d", "1"]) == 1
    data = json.loads(cert.read_text())
    data["steps"] = data["steps"][1:] + data["steps"][:1]
    cert.write_text(json.dumps(data))
    assert main(["collapse", path, "--check", str(cert)]) == 1


def test_collapse_on_facet_file(tmp_path, capsys):
    p = tmp_path / "k.txt"
    p.write_text("1 2\n2 3\n1 3\n")
    assert main(["collapse", str(p), "--facets", "--d", "1"]) == 1
    assert main(["collapse", str(p), "--facets", "--d", "2"]) == 0
    assert main(["collapse", str(p), "--facets"]) == 2


def test_sweep_exhaustive_n4_clean(capsys):
    assert main(["sweep", "--mode", "exhaustive", "--n", "1..4", "--summary-only"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["graphs"] == 1 + 2 + 8 + 64
    assert summary["failures"] == []
    assert summary["verdicts"]["bound_mes"]["pass"] > 0


def test_sweep_random_reproducible(tmp_path):
    cfg = SweepConfig(mode="random-chordal", n_values=(5, 8), count=30, seed=3)
    a, b = run_sweep(cfg), run_sweep(cfg)
    assert a.to_json()["digest"] == b.to_json()["digest"]
    assert not a.any_failure
    c = run_sweep(SweepConfig(mode="random-chordal", n_values=(5, 8), count=30, seed=4))
    assert c.to_json()["digest"] != a.to_json()["digest"]


def test_sweep_writes_json_lines(tmp_path):
    out = tmp_path / "s.jsonl"
    assert main(["sweep", "--n", "3", "--out", str(out), "--collapse-budget", "0"]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 8 and all(json.loads(x)["id"].startswith("n3#") for x in lines)


def test_parse_range():
    assert parse_range("6") == (6,)
    assert parse_range("4..6") == (4, 5, 6)


def test_report_byte_reproducible():
    G = random_chordal(8, 0.5, 12)
    cfg = AnalysisConfig(fields=("gf2", "rational"), all_seeds=True, shuffles=2)
    assert canonical_json(analyze(G, cfg)) == canonical_json(analyze(G, cfg))


def test_verdicts_invariant_under_relabeling():
    rng = random.Random(6)
    for k in range(30):
        G = random_chordal(rng.randint(3, 8), rng.random(), k)
        perm = list(range(G.n))
        rng.shuffle(perm)
        a, b = analyze(G), analyze(G.relabel(perm))
        for key in ("gamma", "igamma", "bound", "betti"):
            assert a[key] == b[key]
        assert {k: v["status"] for k, v in a["verdicts"].items()} == \
            {k: v["status"] for k, v in b["verdicts"].items()}


def test_closed_semantics_flag(tmp_path, capsys):
    path = write(tmp_path, make("12", n=3))
    out = tmp_path / "r.json"
    assert main(["analyze", path, "--domination-semantics", "closed", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["semantics"] == "closed" and rep["bound"] == 0


@pytest.mark.parametrize("n", [1, 2, 6, 12])
def test_random_chordal_shape(n):
    from noncover.chordal import is_chordal
    from noncover.graph import is_connected
    for seed in range(20):
        G = random_chordal(n, random.Random(seed).random(), seed)
        assert G.n == n and is_chordal(G) and is_connected(G)
    assert random_chordal(n, 1.0, 0).m == n * (n - 1) // 2
    assert random_chordal(n, 0.0, 0).m == max(n - 1, 0)
