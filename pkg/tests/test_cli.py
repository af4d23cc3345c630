"""Command line behavior: sections, formats, and the exit-code contract."""

import json
import subprocess
import sys

import pytest

import posetdecomp.cut
import posetdecomp.hcd
from posetdecomp.cli import main
from posetdecomp.generate import two_chain_fan
from posetdecomp.textio import dumps

CLI = [sys.executable, "-m", "posetdecomp.cli"]


def run_cli(*args, stdin: str | None = None):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, input=stdin
    )


def test_generate_then_analyze_pipe():
    gen = run_cli("generate", "boolean", "--n", "2")
    assert gen.returncode == 0
    assert gen.stdout.startswith("# poset, n=4")
    ana = run_cli("analyze", "-", stdin=gen.stdout)
    assert ana.returncode == 0
    assert "dilworth: minimum chains = 2, maximum antichain = 2 (equal)" in ana.stdout
    assert "minimal homogeneous decomposition: k = 3" in ana.stdout


def test_generate_all_families():
    for family in ("chain", "antichain", "boolean", "fan", "random", "wrapforest"):
        out = run_cli("generate", family, "--n", "3", "--seed", "1")
        assert out.returncode == 0, family
        assert out.stdout.startswith("# poset")


def test_generate_to_file(tmp_path):
    target = tmp_path / "p.txt"
    out = run_cli("generate", "fan", "--n", "2", "--out", str(target))
    assert out.returncode == 0
    assert target.read_text().startswith("# poset, n=5")


def test_analyze_sections_subset(tmp_path):
    target = tmp_path / "p.txt"
    target.write_text(dumps(two_chain_fan(2)))
    out = run_cli("analyze", str(target), "--dilworth")
    assert out.returncode == 0
    assert "dilworth:" in out.stdout
    assert "embedding:" not in out.stdout


def test_analyze_json_round_trips(tmp_path):
    target = tmp_path / "p.txt"
    target.write_text(dumps(two_chain_fan(2)))
    out = run_cli("analyze", str(target), "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == out.stdout
    assert doc["ok"] is True
    assert set(doc["sections"]) == {
        "dilworth",
        "mhcd",
        "cut-check",
        "embedding",
        "inequalities",
    }


def test_analyze_dot_output(tmp_path):
    poset_file = tmp_path / "p.txt"
    poset_file.write_text(dumps(two_chain_fan(2)))
    dot_file = tmp_path / "g.dot"
    out = run_cli("analyze", str(poset_file), "--mhcd", "--dot", str(dot_file))
    assert out.returncode == 0
    text = dot_file.read_text()
    assert "graph chains {" in text
    assert "digraph oriented {" in text


def test_exit_code_2_on_malformed_input():
    out = run_cli("analyze", "-", stdin="nonsense\n")
    assert out.returncode == 2
    assert "error:" in out.stderr


def test_exit_code_2_on_cycle():
    out = run_cli("analyze", "-", stdin="elements: a b\na < b\nb < a\n")
    assert out.returncode == 2
    assert "cycle" in out.stderr


def test_exit_code_2_on_missing_file():
    out = run_cli("analyze", "/nonexistent/poset.txt")
    assert out.returncode == 2


def test_exit_code_3_on_scope_cap():
    gen = run_cli("generate", "antichain", "--n", "12")
    out = run_cli("analyze", "-", "--embedding", stdin=gen.stdout)
    assert out.returncode == 3
    assert "--unsafe-scope" in out.stderr


def test_unsafe_scope_lifts_cap():
    gen = run_cli("generate", "chain", "--n", "11")
    out = run_cli("analyze", "-", "--inequalities", "--unsafe-scope", stdin=gen.stdout)
    assert out.returncode == 0
    assert "1 <= 1 <= 1 <= 1 <= 1" in out.stdout


def test_verify_exhaustive_passes():
    out = run_cli("verify", "exhaustive", "--nmax", "3")
    assert out.returncode == 0
    assert "all checks passed" in out.stdout


def test_verify_random_json():
    out = run_cli("verify", "random", "--n", "7", "--count", "5", "--seed", "2", "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["ok"] is True
    assert doc["posets"] == 5
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == out.stdout


def test_verify_wrapforest_family():
    out = run_cli(
        "verify", "random", "--n", "9", "--count", "5", "--family", "wrapforest"
    )
    assert out.returncode == 0


def test_verify_checks_subset():
    out = run_cli("verify", "exhaustive", "--nmax", "3", "--checks", "dilworth,cut")
    assert out.returncode == 0


def test_main_is_callable_in_process(capsys):
    code = main(["generate", "chain", "--n", "3"])
    assert code == 0
    out = capsys.readouterr().out
    assert "elements: 1 2 3" in out


def test_mutated_operator_fails_with_witness(monkeypatch, capsys):
    # corrupt one comparability bit of J; the identity must catch it
    real = posetdecomp.cut.j_matrix

    def crooked(p, d):
        j = real(p, d)
        if len(j) >= 2:
            j[0][1] = 1 - j[0][1]
        return j

    monkeypatch.setattr(posetdecomp.cut, "j_matrix", crooked)
    monkeypatch.setenv("POSET_DECOMP_THREADS", "1")
    code = main(["verify", "exhaustive", "--nmax", "4"])
    captured = capsys.readouterr()
    assert code == 1
    assert "witness" in captured.err


def test_mutated_orientation_fails(monkeypatch, capsys):
    # flipping the orientation rule must break the embedding check
    real = posetdecomp.hcd.induced_chain_permutation

    def crooked(p, d, g):
        sigma = list(real(p, d, g))
        if len(sigma) >= 2:
            sigma[0], sigma[1] = sigma[1], sigma[0]
        return tuple(sigma)

    monkeypatch.setattr(posetdecomp.hcd, "induced_chain_permutation", crooked)
    monkeypatch.setenv("POSET_DECOMP_THREADS", "1")
    code = main(["verify", "exhaustive", "--nmax", "3"])
    captured = capsys.readouterr()
    assert code == 1
