"""Command-line behavior: exit codes, text and structured output."""

import json

import pytest

from charlattice.verifycli.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_text(capsys):
    code, out, _ = run(capsys, "dim", "E7", "w7")
    assert code == 0
    assert out.strip() == "56"


def test_dim_structured(capsys):
    code, out, _ = run(capsys, "--format", "structured", "dim", "A2", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"algebra": "A2", "weight": [1, 1], "dim": 8}


def test_structured_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, "--format", "structured", "weights", "G2", "1,0")
    _, second, _ = run(capsys, "--format", "structured", "weights", "G2", "1,0")
    assert first == second
    doc = json.loads(first)
    assert sum(w["mult"] for w in doc["weights"]) == 7


def test_omega_shorthand_variants(capsys):
    for spec in ("w1", "omega1", "ω1"):
        code, out, _ = run(capsys, "dim", "B4", spec)
        assert code == 0
        assert out.strip() == "9"


def test_weights_text_lists_rows(capsys):
    code, out, _ = run(capsys, "weights", "A1", "2")
    assert code == 0
    assert out.splitlines() == ["-2 1", "0 1", "2 1"]


def test_multfree_catalog(capsys):
    code, out, _ = run(capsys, "multfree", "D5")
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = run(capsys, "multfree", "E8")
    assert code == 0
    assert out.strip() == ""


def test_multfree_type_a_needs_bound(capsys):
    code, _, err = run(capsys, "multfree", "A3")
    assert code == 2
    assert "error" in err


def test_samechar_finds_witness(capsys, tmp_path):
    g2 = tmp_path / "g2.char"
    trip = tmp_path / "trip.char"
    code, out, _ = run(capsys, "weights", "G2", "1,0")
    g2.write_text("algebra: G2\nweights:\n" + out, encoding="utf-8")
    rows = []
    for hw in ("1,0", "0,1"):
        code, out, _ = run(capsys, "weights", "A2", hw)
        rows.append(out)
    trip.write_text("algebra: A2\nweights:\n" + rows[0] + rows[1] + "0 0 1\n",
                    encoding="utf-8")
    code, out, _ = run(capsys, "samechar", str(g2), str(trip))
    assert code == 0
    assert out.startswith("witness:")
    assert len(out.splitlines()) == 3  # header plus a 2x2 matrix


def test_samechar_reports_absence(capsys, tmp_path):
    a = tmp_path / "a.char"
    b = tmp_path / "b.char"
    a.write_text("algebra: A1\nweights:\n-1 1\n1 1\n", encoding="utf-8")
    b.write_text("algebra: A1\nweights:\n-2 1\n2 1\n0 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "samechar", str(a), str(b))
    assert code == 0
    assert out.strip() == "no witness"


def test_factorize_grid(capsys, tmp_path):
    f = tmp_path / "grid.mset"
    rows = [f"{x} {y} 1" for x in range(2) for y in range(3)]
    f.write_text("\n".join(rows) + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "factorize", str(f), "--profile", "2,3")
    assert code == 0
    assert "1 factorization" in out or out.splitlines()[0].startswith("factorization")

    code, out, _ = run(capsys, "--format", "structured", "factorize", str(f),
                       "--profile", "2,3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 1
    assert doc["profile"] == [2, 3]


def test_subsystems_b3(capsys):
    code, out, _ = run(capsys, "subsystems", "B3")
    assert code == 0
    assert set(out.split()) == {"B3", "A3", "A1+A1+A1"}


def test_allowed_pairs_27(capsys):
    code, out, _ = run(capsys, "allowed-pairs", "27")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert sum("E6" in line for line in lines) == 2
    assert any("B13" in line for line in lines)


def test_allowed_pairs_gate_failure(capsys):
    code, out, err = run(capsys, "allowed-pairs", "20")
    assert code == 1
    assert "gate violated" in out
    assert "rejected n=20" in err
    code, _, err = run(capsys, "allowed-pairs", "21")
    assert code == 1
    assert "rejected n=21" in err  # 21 = 3 * 7


def test_allowed_pairs_structured_gate(capsys):
    code, out, _ = run(capsys, "--format", "structured", "allowed-pairs", "28")
    assert code == 1
    doc = json.loads(out)
    assert doc["gate_passed"] is False
    assert doc["gate_reasons"]


def test_verify_single_case(capsys):
    code, out, _ = run(capsys, "verify", "sl2k-selfdual", "-p", "k=6")
    assert code == 0
    assert "verdict: pass" in out
    assert "[FAIL]" not in out


def test_verify_structured_doc(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify", "e6-parity")
    assert code == 0
    doc = json.loads(out)
    assert doc["case"] == "e6-parity"
    assert doc["verdict"] == "pass"
    assert all(s["pass"] for s in doc["steps"])


def test_verify_rejects_unknown_case(capsys):
    code, _, err = run(capsys, "verify", "no-such-case")
    assert code == 2
    assert "error" in err


def test_verify_rejects_bad_param(capsys):
    code, _, err = run(capsys, "verify", "sl2k-selfdual", "-p", "k")
    assert code == 2
    code, _, err = run(capsys, "verify", "sl2k-selfdual", "-p", "bogus=3")
    assert code == 2


def test_verify_param_type_errors(capsys):
    code, _, err = run(capsys, "verify", "sl2k-selfdual", "-p", "k=x")
    assert code == 2


def test_verify_paper_suite(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "30/30 cases passed" in out


def test_verify_paper_structured(capsys):
    code, out, _ = run(capsys, "--format", "structured", "verify-paper")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] == doc["total"] == 30


def test_usage_error_for_bad_weight(capsys):
    code, _, err = run(capsys, "dim", "A2", "1,2,3")
    assert code == 2
    assert "coordinates" in err


def test_usage_error_for_bad_algebra(capsys):
    code, _, err = run(capsys, "dim", "Q5", "1")
    assert code == 2


def test_shorthand_needs_simple_algebra(capsys):
    code, _, err = run(capsys, "dim", "A1+A1", "w1")
    assert code == 2
    assert "simple" in err
