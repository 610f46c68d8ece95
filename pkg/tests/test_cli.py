"""End-to-end command line runs: outputs, determinism, exit codes."""

from __future__ import annotations

import json
from types import SimpleNamespace

import pytest

import soficrank.cli as cli
from soficrank.cli import main

GROUP_DOC = {
    "kind": "free-abelian",
    "rank": 1,
    "prime": 2,
    "elements": {"a": [["1", 1], ["t", 1]], "t": "t", "tinv": "t^-1"},
}


@pytest.fixture()
def group_file(tmp_path):
    path = tmp_path / "z.json"
    path.write_text(json.dumps(GROUP_DOC), encoding="utf-8")
    return path


def run(*argv):
    return main([str(a) for a in argv])


# ---------------------------------------------------------------------------
# happy paths


def test_approximate_writes_defect_reports(group_file, tmp_path):
    out = tmp_path / "out"
    code = run(
        "approximate", "--group", group_file, "--schedule", "folner:8,16",
        "--radius", "2", "--out", out, "--seed", "1",
    )
    assert code == 0
    csv = (out / "defects.csv").read_text()
    assert csv.splitlines()[0] == "# seed=1"
    assert csv.splitlines()[1] == "label,vertices,max_a,defect_b,max_agreement_c"
    assert "box:8,8,1/4,0/1,1/4" in csv
    assert "box:16,16,1/8,0/1,1/8" in csv
    assert (out / "defects_box-8.txt").exists()
    assert (out / "approx_box-16.json").exists()


def test_rank_sequence_files(group_file, tmp_path):
    out = tmp_path / "out"
    code = run(
        "rank", "--group", group_file, "--schedule", "quotient:4,8,16",
        "--element", "a", "--out", out, "--seed", "5",
    )
    assert code == 0
    csv = (out / "rank_a.csv").read_text()
    assert csv == (
        "# seed=5\n"
        "label,vertices,normalized_rank\n"
        "quotient:4,4,3/4\n"
        "quotient:8,8,7/8\n"
        "quotient:16,16,15/16\n"
    )
    txt = (out / "rank_a.txt").read_text()
    assert "element: 1*1 + t" in txt
    assert "last: 15/16" in txt
    assert "tail-min: 7/8" in txt


def test_rank_output_is_byte_deterministic(group_file, tmp_path):
    outs = []
    for name in ("one", "two"):
        out = tmp_path / name
        assert run(
            "rank", "--group", group_file, "--schedule", "quotient:8,16",
            "--element", "a", "--out", out, "--seed", "9",
        ) == 0
        outs.append((out / "rank_a.csv").read_bytes())
    assert outs[0] == outs[1]


def test_convert_round_trip_on_exact_family(group_file, tmp_path):
    out = tmp_path / "out"
    code = run(
        "convert", "--group", group_file, "--schedule", "quotient:16",
        "--direction", "round-trip", "--r", "2", "--out", out, "--seed", "2",
    )
    assert code == 0
    graph_text = (out / "graph_quotient-16.txt").read_text()
    assert graph_text.splitlines()[0] == "vertices 16"
    good_text = (out / "good_quotient-16.txt").read_text()
    assert good_text.splitlines()[0] == "delta 1/10"
    thr = (out / "threshold_quotient-16.txt").read_text()
    assert "epsilon-threshold: 1/2060" in thr
    assert "meets-delta-target: True" in thr
    rt = (out / "roundtrip_quotient-16.txt").read_text()
    assert "differences: 0" in rt
    assert not list(out.glob("counterexample*"))


def test_convert_graph_to_maps_direction(group_file, tmp_path):
    out1 = tmp_path / "stage1"
    assert run(
        "convert", "--group", group_file, "--schedule", "quotient:16",
        "--direction", "maps-to-graph", "--r", "2", "--out", out1,
    ) == 0
    out2 = tmp_path / "stage2"
    code = run(
        "convert", "--group", group_file, "--direction", "graph-to-maps",
        "--graph", out1 / "graph_quotient-16.txt",
        "--good", out1 / "good_quotient-16.txt",
        "--r", "2", "--out", out2,
    )
    assert code == 0
    assert (out2 / "approx_charted.json").exists()
    assert (out2 / "defects_charted.txt").exists()


def test_finiteness_unit_pair(group_file, tmp_path):
    out = tmp_path / "out"
    code = run(
        "finiteness", "--group", group_file, "--schedule", "quotient:4,8",
        "-a", "t", "-b", "tinv", "--out", out,
    )
    assert code == 0
    csv = (out / "finiteness_t_tinv.csv").read_text()
    assert csv == (
        "# seed=0\n"
        "label,vertices,rank_ab_minus_one,rank_ba_minus_one\n"
        "quotient:4,4,0/1,0/1\n"
        "quotient:8,8,0/1,0/1\n"
    )
    txt = (out / "finiteness_t_tinv.txt").read_text()
    assert "consistent: True" in txt
    assert not list(out.glob("counterexample*"))


def test_finiteness_non_inverse_pair_is_still_consistent(group_file, tmp_path):
    out = tmp_path / "out"
    code = run(
        "finiteness", "--group", group_file, "--schedule", "quotient:4,8",
        "-a", "a", "-b", "tinv", "--out", out,
    )
    assert code == 0  # ab != 1 and ba != 1: no one-sidedness, no violation
    txt = (out / "finiteness_a_tinv.txt").read_text()
    assert "ab-is-one: False" in txt and "consistent: True" in txt


def test_axioms_and_regularity_reports(tmp_path):
    out = tmp_path / "out"
    assert run(
        "axioms", "--prime", "3", "--size", "6", "--trials", "10",
        "--seed", "3", "--out", out,
    ) == 0
    report = (out / "axioms_p3_n6.txt").read_text()
    assert "product-failures: 0" in report
    assert "ok: True" in report
    assert run(
        "regularity", "--prime", "3", "--size", "6", "--trials", "10",
        "--seed", "3", "--out", out,
    ) == 0
    assert "failures: 0" in (out / "regularity_p3.txt").read_text()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "approximate" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# configuration errors: exit code 2


def test_exit_two_on_config_errors(group_file, tmp_path, capsys):
    cases = [
        ["rank", "--group", str(tmp_path / "nope.json"), "--schedule", "quotient:4", "--element", "a"],
        ["rank", "--group", str(group_file), "--schedule", "quotient:", "--element", "a"],
        ["rank", "--group", str(group_file), "--schedule", "weird:4", "--element", "a"],
        ["rank", "--group", str(group_file), "--schedule", "quotient:4", "--element", "zz"],
        ["rank", "--group", str(group_file), "--schedule", "quotient:8,8", "--element", "a"],
        ["axioms", "--prime", "4", "--size", "4", "--trials", "2"],
        ["convert", "--group", str(group_file), "--direction", "graph-to-maps", "--r", "2"],
        [],
    ]
    for argv in cases:
        assert main(argv) == 2, argv
        capsys.readouterr()


def test_exit_two_on_malformed_group_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops", encoding="utf-8")
    assert main(["rank", "--group", str(bad), "--schedule", "quotient:4", "--element", "a"]) == 2


def test_exit_two_on_malformed_graph_file(group_file, tmp_path):
    graph = tmp_path / "graph.txt"
    graph.write_text("not a graph\n", encoding="utf-8")
    code = main([
        "convert", "--group", str(group_file), "--direction", "graph-to-maps",
        "--graph", str(graph), "--r", "1", "--out", str(tmp_path / "o"),
    ])
    assert code == 2


# ---------------------------------------------------------------------------
# violation paths: exit code 1 with a counterexample artifact


def test_finiteness_violation_produces_counterexample(group_file, tmp_path, monkeypatch):
    fake = SimpleNamespace(
        a_text="t",
        b_text="t^-1",
        ab_is_one=True,
        ba_is_one=False,
        consistent=False,
        ab_sequence=SimpleNamespace(levels=()),
        ba_sequence=SimpleNamespace(levels=()),
        to_text=lambda: "ab-is-one: True\nba-is-one: False\nconsistent: False\n",
    )
    monkeypatch.setattr(cli, "direct_finiteness_check", lambda a, b, fam: fake)
    out = tmp_path / "out"
    code = run(
        "finiteness", "--group", group_file, "--schedule", "quotient:4",
        "-a", "t", "-b", "tinv", "--out", out,
    )
    assert code == 1
    blob = (out / "counterexample_finiteness_t_tinv.txt").read_text()
    assert "ab-is-one: True" in blob and "ba-is-one: False" in blob


def test_finiteness_corroboration_mismatch_is_a_violation(group_file, tmp_path, monkeypatch):
    level = SimpleNamespace(label="quotient:4", n_points=4, value=1)
    fake = SimpleNamespace(
        a_text="t",
        b_text="t^-1",
        ab_is_one=True,
        ba_is_one=True,
        consistent=True,
        ab_sequence=SimpleNamespace(levels=(level,)),
        ba_sequence=SimpleNamespace(levels=(level,)),
        to_text=lambda: "consistent: True\n",
    )
    monkeypatch.setattr(cli, "direct_finiteness_check", lambda a, b, fam: fake)
    out = tmp_path / "out"
    code = run(
        "finiteness", "--group", group_file, "--schedule", "quotient:4",
        "-a", "t", "-b", "tinv", "--out", out,
    )
    assert code == 1
    assert "corroboration-bad: True" in (out / "counterexample_finiteness_t_tinv.txt").read_text()


def test_axioms_violation_exit_code(tmp_path, monkeypatch):
    fake = SimpleNamespace(
        p=3, size=4, ok=False, first_failure="product rule failed on trial 7",
        to_text=lambda: "ok: False\n",
    )
    monkeypatch.setattr(cli, "pseudo_rank_axioms_check", lambda p, n, t, s: fake)
    out = tmp_path / "out"
    code = run("axioms", "--prime", "3", "--size", "4", "--trials", "5", "--out", out)
    assert code == 1
    assert "product rule failed" in (out / "counterexample_axioms_p3_n4.txt").read_text()


def test_regularity_violation_exit_code(tmp_path, monkeypatch):
    fake = SimpleNamespace(
        p=5, ok=False, first_failure="witness identity failed",
        to_text=lambda: "ok: False\n",
    )
    monkeypatch.setattr(cli, "regularity_witness_check", lambda p, n, t, s: fake)
    out = tmp_path / "out"
    code = run("regularity", "--prime", "5", "--size", "4", "--trials", "5", "--out", out)
    assert code == 1
    assert (out / "counterexample_regularity_p5.txt").exists()


def test_round_trip_differences_on_exact_family_violate(group_file, tmp_path, monkeypatch):
    monkeypatch.setattr(
        cli, "map_agreement_diff", lambda orig, rebuilt, els, verts: [((1,), 0, 0, 1)]
    )
    out = tmp_path / "out"
    code = run(
        "convert", "--group", group_file, "--schedule", "quotient:16",
        "--direction", "round-trip", "--r", "2", "--out", out,
    )
    assert code == 1
    assert (out / "counterexample_roundtrip_quotient-16.txt").exists()


def test_round_trip_differences_on_box_family_tolerated(group_file, tmp_path, monkeypatch):
    monkeypatch.setattr(
        cli, "map_agreement_diff", lambda orig, rebuilt, els, verts: [((1,), 0, 0, 1)]
    )
    out = tmp_path / "out"
    code = run(
        "convert", "--group", group_file, "--schedule", "folner:32",
        "--direction", "round-trip", "--r", "1", "--out", out,
    )
    assert code == 0  # boxes are approximate; differences are reported, not fatal
    assert "differences: 1" in (out / "roundtrip_box-32.txt").read_text()
    assert not list(out.glob("counterexample*"))
