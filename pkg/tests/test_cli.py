from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from specdl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def test_energy_family_before_command(capsys):
    code, r = report(capsys, "--family", "complete_bipartite:2,3", "energy")
    assert code == 0 and r["energy_report"]["dle"] == pytest.approx(12.4)
    assert r["schema_version"] == "1.0" and r["timing"] is None


def test_energy_complete(capsys):
    code, r = report(capsys, "energy", "--family", "complete:5")
    assert code == 0 and r["energy_report"]["dle"] == 8


def test_spectrum_paw(capsys):
    code, r = report(capsys, "--graph6", "CN", "spectrum")
    assert code == 0
    assert r["spectra"]["distance_laplacian"]["numeric"] == [7.0, 5.0, 4.0, 0.0]


def test_spectrum_analytic_strings(capsys):
    _, r = report(capsys, "spectrum", "--family", "complete_split:2,5")
    dl = r["spectra"]["distance_laplacian"]
    assert dl["analytic"] is not None and len(dl["analytic"]) == 5
    assert [float(eval(v)) for v in dl["analytic"]] == pytest.approx(dl["numeric"], abs=1e-9)
    for key in ("distance_laplacian", "laplacian", "distance"):
        vals = r["spectra"][key]["numeric"]
        assert vals == sorted(vals, reverse=True)


def test_edgelist_input_records_digest(capsys, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n", encoding="utf-8")
    code, r = report(capsys, "energy", "--edgelist", str(path))
    assert code == 0 and r["energy_report"]["dle"] == pytest.approx(12)
    assert r["input"]["kind"] == "edgelist" and len(r["input"]["sha256"]) == 64


def test_verify_brouwer_range(capsys):
    code, r = report(capsys, "verify", "brouwer", "--n", "5")
    assert code == 0 and r["summary"]["violations"] == 0
    assert len(r["bound_checks"]) == 21  # one per isomorphism class


def test_verify_wiener_star(capsys):
    code, r = report(capsys, "verify", "wiener-lower", "--family", "star:4")
    assert code == 0
    (c,) = r["bound_checks"]
    assert c["equality"] and c["equality_predicted"]


def test_verify_connectivity_paw_only(capsys):
    code, r = report(capsys, "verify", "connectivity-bound", "--n", "4", "--k", "1")
    assert code == 0
    assert [c["graph"] for c in r["bound_checks"] if c["equality"]] == ["CN"]


def test_verify_labeled_summary(capsys):
    code, r = report(capsys, "verify", "wiener-lower", "--n", "4", "--labeled")
    assert code == 0 and r["summary"]["mismatches"] == 12


@pytest.mark.parametrize(
    "argv, graph",
    [
        (["search", "bipartite", "--n", "6"], "Es\\o"),
        (["search", "independence", "--n", "5", "--alpha", "3"], "DF{"),
    ],
)
def test_search_examples(capsys, argv, graph):
    code, r = report(capsys, *argv)
    assert code == 0 and r["result"]["minimizer_graphs"] == [graph]
    assert r["result"]["matches_paper_prediction"] is True


def test_search_connectivity_reports_t(capsys):
    code, r = report(capsys, "search", "connectivity", "--n", "5", "--k", "1")
    assert code == 0 and r["result"]["witnessing_t"] == [1]


def test_search_mismatch_exit_one(capsys):
    code, r = report(capsys, "search", "independence", "--n", "6", "--alpha", "4")
    assert code == 1 and r["result"]["matches_paper_prediction"] is False


def test_census(capsys):
    code, r = report(capsys, "census", "--n", "4")
    assert code == 0 and sum(r["result"]["histogram"].values()) == 6


@pytest.mark.parametrize(
    "argv, code",
    [
        (["energy", "--graph6", "C?"], 3),  # edgeless: disconnected
        (["energy", "--family", "nonsense:1"], 2),
        (["energy", "--graph6", "!!"], 2),
        (["energy"], 2),
        (["verify", "dle-via-sk", "--family", "complete:4"], 2),
        (["verify", "brouwer", "--n", "9"], 2),
        (["search", "independence", "--n", "5"], 2),
        (["search", "bipartite", "--n", "8"], 2),
        (["no-such-command"], 2),
        (["--family", "complete:3", "energy", "--graph6", "Bw"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err and not err.lstrip().startswith("{")


def test_byte_identical_output(capsys):
    argv = ["energy", "--family", "pineapple:6,2"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_float_precision(capsys):
    _, out, _ = run(capsys, "energy", "--family", "cycle:7")
    r = json.loads(out)
    for v in r["spectra"]["distance"]["numeric"]:
        assert len(repr(abs(v)).replace(".", "").lstrip("0").split("e")[0]) <= 12


def test_timing_opt_in(capsys):
    _, r = report(capsys, "--timing", "energy", "--family", "complete:4")
    assert r["timing"]["seconds"] >= 0


def test_csv_flattens_bound_checks(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "brouwer", "--family", "cycle:5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert {"theorem_id", "lhs", "rhs", "holds"} <= set(rows[0])


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "specdl.cli", "energy", "--family", "star:4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["energy_report"]["dle"] == 10
