"""Command-line behavior: outputs, schemas, exit codes, determinism."""

import json
import textwrap

import pytest

from ezdlab.cli import main

HILBERT_GOLDEN = textwrap.dedent(
    """\
    {
      "artinian": true,
      "artinian_within_bound": true,
      "bound": 5,
      "command": "hilbert",
      "ideal": "x1^3, x2^3",
      "nvars": 2,
      "schema_version": 1,
      "top_degree": 4,
      "values": [
        1,
        2,
        3,
        2,
        1,
        0
      ]
    }
    """
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilbert_table(capsys):
    code, out, _ = run(capsys, "hilbert", "-n", "2", "-D", "5", "x1^3, x2^3")
    assert code == 0
    assert out.splitlines()[0] == "H(0..5): 1 2 3 2 1 0"
    assert "artinian: yes (top degree 4)" in out


def test_hilbert_three_vars(capsys):
    code, out, _ = run(capsys, "hilbert", "-n", "3", "-D", "3", "x1^2, x2^2, x2*x3, x3^2")
    assert code == 0
    assert out.splitlines()[0] == "H(0..3): 1 3 2 0"


def test_hilbert_json_golden(capsys):
    code, out, _ = run(capsys, "hilbert", "-n", "2", "-D", "5", "x1^3, x2^3", "--format", "json")
    assert code == 0
    assert out == HILBERT_GOLDEN


def test_hilbert_default_bound(capsys):
    code, out, _ = run(capsys, "hilbert", "-n", "2", "x1^3, x2^3")
    assert code == 0
    assert out.splitlines()[0] == "H(0..5): 1 2 3 2 1 0"


def test_malformed_input_exits_2(capsys):
    code, _, err = run(capsys, "hilbert", "-n", "2", "-D", "3", "x1 + ?")
    assert code == 2
    assert "error:" in err and "column" in err


def test_non_homogeneous_exits_2(capsys):
    code, _, err = run(capsys, "hilbert", "-n", "2", "-D", "3", "x1 + x2^2")
    assert code == 2
    assert "degree" in err


def test_missing_bound_exits_2(capsys):
    code, _, err = run(capsys, "hilbert", "-n", "2", "x1*x2")
    assert code == 2
    assert "-D" in err


def test_ezd_generic_yes(capsys):
    code, out, _ = run(capsys, "ezd", "-n", "2", "-D", "2", "x1^2, x2^2")
    assert code == 0
    assert "decision: generically_yes (exact)" in out
    assert "witness Q: x1 - x2" in out


def test_ezd_generic_no(capsys):
    code, out, _ = run(capsys, "ezd", "-n", "2", "-D", "2", "x1^2, x1*x2, x2^2")
    assert code == 1
    assert "decision: no" in out


def test_ezd_form_exact_pair(capsys):
    code, out, _ = run(capsys, "ezd", "-n", "2", "-D", "2", "x1^2, x2^2", "--form", "x1 + x2")
    assert code == 0
    assert "verdict: exact_pair" in out
    assert "annihilator dims by degree: 0 1 1" in out


def test_ezd_form_no_partner(capsys):
    code, out, _ = run(
        capsys, "ezd", "-n", "2", "-D", "2", "x1^2, x1*x2, x2^2", "--form", "x1 + x2"
    )
    assert code == 1
    assert "no exact partner" in out


def test_ezd_json_schema(capsys):
    code, out, _ = run(capsys, "ezd", "-n", "2", "x1^2, x2^2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["command"] == "ezd"
    assert payload["decision"] == "generically_yes"
    assert payload["witness"] == "x1 - x2"
    assert payload["report"]["verdict"] == "exact_pair"
    assert [row["dim_ring"] for row in payload["report"]["table"]] == [1, 2, 1]


def test_wlp_holds(capsys):
    code, out, _ = run(capsys, "wlp", "-n", "2", "-D", "4", "x1^3, x2^3")
    assert code == 0
    assert "weak Lefschetz property: holds" in out


def test_socle(capsys):
    code, out, _ = run(capsys, "socle", "-n", "2", "-D", "2", "x1^2, x1*x2, x2^2")
    assert code == 0
    assert "socle dims by degree: 0 2" in out
    assert "gorenstein: no" in out


def test_yoshino(capsys):
    code, out, _ = run(capsys, "yoshino", "-n", "3", "-D", "2", "x1^2, x2^2, x2*x3, x3^2")
    assert code == 0
    assert "c1 (dim R_2 = dim R_1 - 1): ok" in out
    assert "c2 (generated in degree 2): ok" in out


def test_scan_monomial_table(capsys):
    code, out, _ = run(capsys, "scan", "monomial", "-n", "2", "--max-deg", "2")
    assert code == 0
    assert "instances examined: 2" in out
    assert "counterexamples: 0" in out


def test_scan_json_and_worker_determinism(capsys):
    args = ["scan", "monomial", "-n", "3", "--max-deg", "3", "--seed", "7", "--format", "json", "--full"]
    code1, out1, _ = run(capsys, *args, "--workers", "1")
    code4, out4, _ = run(capsys, *args, "--workers", "4")
    assert code1 == code4 == 0
    assert out1 == out4
    payload = json.loads(out1)
    assert payload["schema_version"] == 1
    assert payload["counterexamples"] == []
    assert "workers" not in payload["config"]


def test_scan_binomial_csv(capsys):
    code, out, _ = run(capsys, "scan", "binomial", "-n", "2", "--trials", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("index,ideal,hilbert,r2,boundary")
    assert len(lines) > 1


def test_scan_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "scan", "monomial", "-n", "2", "--max-deg", "2", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    assert "wrote" in out
    payload = json.loads(target.read_text())
    assert payload["examined"] == 2


def test_example_command(capsys):
    code, out, _ = run(capsys, "example", "-n", "3", "-d", "2")
    assert code == 0
    assert "verdict: exact_pair" in out
    code, out, _ = run(capsys, "example", "-n", "2", "-d", "3")
    assert code == 0
    assert "y: x1^2 - x1*x2 + x2^2" in out


def test_example_usage_error(capsys):
    code, _, err = run(capsys, "example", "-n", "1", "-d", "2")
    assert code == 2
    assert "n >= 2" in err


def test_ideal_from_file(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("# generators\nx1^2\nx2^2\n")
    code, out, _ = run(capsys, "hilbert", "-n", "2", "-D", "3", "--file", str(path))
    assert code == 0
    assert out.splitlines()[0] == "H(0..3): 1 2 1 0"


def test_both_sources_rejected(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("x1^2")
    code, _, err = run(capsys, "hilbert", "-n", "2", "-D", "2", "x1^2", "--file", str(path))
    assert code == 2
    assert "not both" in err


def test_no_source_rejected(capsys):
    code, _, err = run(capsys, "hilbert", "-n", "2", "-D", "2")
    assert code == 2
    assert "no ideal" in err
