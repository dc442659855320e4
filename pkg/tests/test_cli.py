"""End-to-end checks of the command-line interface.

Everything goes through main(argv) so the exit codes and stdout/stderr
behavior are exercised exactly as a shell user would see them; one smoke
test runs the real interpreter via -m.
"""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from operadyn import bianchi, quantum
from operadyn.cli import COLUMNS, main
from operadyn.ncpoly import NCPoly
from operadyn.poly import Poly, as_poly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTables:
    def test_bianchi_json_round_trip(self, capsys):
        code, out, err = run(capsys, "tables", "bianchi", "--format", "json")
        assert code == 0 and err == ""
        doc = json.loads(out)
        assert doc["table"] == "bianchi"
        assert [row["type"] for row in doc["types"]] == list(bianchi.TAGS)
        for row in doc["types"]:
            a = Fraction(row["a"]) if row["a"] is not None else None
            tensor = bianchi.structure_constants(bianchi.BianchiType(row["type"], a))
            assert len(row["entries"]) == 9
            for cell in row["entries"]:
                assert Fraction(cell["value"]) == tensor.entry(
                    cell["i"], cell["j"], cell["k"])

    def test_deformed_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "tables", "deformed", "--type", "II",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        tensor = bianchi.deform(bianchi.BianchiType("II"), Fraction(1), Fraction(2))
        (row,) = doc["types"]
        for cell in row["entries"]:
            got = Poly.from_text(cell["value"])
            assert got == as_poly(tensor.entry(cell["i"], cell["j"], cell["k"]))

    def test_quantum_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "tables", "quantum", "--type", "V",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        tensor = quantum.quantize(bianchi.BianchiType("V"), Fraction(1), Fraction(2))
        (row,) = doc["types"]
        assert row["label"] == "V"
        for cell in row["entries"]:
            got = NCPoly.from_text(cell["value"], p0=Fraction(2))
            assert got == tensor.entry(cell["i"], cell["j"], cell["k"])

    def test_csv_golden(self, capsys):
        code, out, _ = run(capsys, "tables", "bianchi", "--type", "IX",
                           "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "type,a," + ",".join(COLUMNS)
        # column order is mu{i}_12 mu{i}_23 mu{i}_31; IX has n1=n2=n3=1
        assert lines[1] == "IX,,0,0,1,1,0,0,0,1,0"

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "tables", "bianchi")
        assert code == 0
        assert "I:" in out and "(all entries zero)" in out
        assert "mu3_12 = 1" in out          # IX and VIII share this entry
        assert "VIIa(a=1/2):" in out

    def test_parametric_label_tracks_a(self, capsys):
        code, out, _ = run(capsys, "tables", "bianchi", "--a", "3/2")
        assert code == 0
        assert "VIIa(a=3/2):" in out

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        _, direct, _ = run(capsys, "tables", "deformed", "--type", "VI",
                           "--format", "csv")
        target = tmp_path / "vi.csv"
        code, out, _ = run(capsys, "tables", "deformed", "--type", "VI",
                           "--format", "csv", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == direct


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "matrix-lax")
        assert code == 0
        assert "matrix-lax: PASS" in out
        assert "overall: PASS" in out
        assert "operadic-lax" not in out

    def test_all_suites(self, capsys):
        code, out, _ = run(capsys, "verify", "all")
        assert code == 0
        for name in ("matrix-lax", "operadic-lax", "jacobi-classical",
                      "jacobi-quantum"):
            assert f"{name}: PASS" in out
        assert out.rstrip().endswith("overall: PASS")

    def test_seed_env_changes_draws_not_outcome(self, capsys, monkeypatch):
        monkeypatch.setenv("OPERADIC_BIANCHI_SEED", "12345")
        code, out, _ = run(capsys, "verify", "matrix-lax")
        assert code == 0 and "overall: PASS" in out


class TestTrace:
    def test_header_and_start_row(self, capsys):
        code, out, _ = run(capsys, "trace", "V", "--t-samples", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t,q,p,Ap,Am," + ",".join(COLUMNS)
        assert len(lines) == 5
        row0 = lines[1].split(",")
        assert row0[0] == "0.0"
        named = dict(zip(lines[0].split(","), row0))
        # at t=0 the deformation sits on the constant class tensor: the
        # Am-proportional entries vanish and the Ap ones hit +-1
        assert named["mu2_12"] == "-1.0"
        assert named["mu3_31"] == "1.0"
        assert named["mu1_12"] == "0.0"
        assert named["mu3_23"] == "0.0"

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "trace", "VIIa", "--t-samples", "7")
        _, second, _ = run(capsys, "trace", "VIIa", "--t-samples", "7")
        assert first == second


class TestUsageErrors:
    def test_unknown_tag(self, capsys):
        code, _, err = run(capsys, "tables", "bianchi", "--type", "X")
        assert code == 2 and "unknown type tag" in err

    def test_irrational_sigma(self, capsys):
        code, _, err = run(capsys, "tables", "deformed", "--p0", "3")
        assert code == 2 and "error:" in err

    def test_modulus_one_listing(self, capsys):
        code, _, err = run(capsys, "tables", "bianchi", "--a", "1")
        assert code == 2 and "VIa" in err

    def test_nonpositive_parameters(self, capsys):
        assert run(capsys, "tables", "bianchi", "--omega", "0")[0] == 2
        assert run(capsys, "tables", "bianchi", "--p0", "-2")[0] == 2

    def test_bad_sample_count(self, capsys):
        code, _, err = run(capsys, "trace", "II", "--t-samples", "0")
        assert code == 2 and "t-samples" in err

    def test_bad_seed_env(self, capsys, monkeypatch):
        monkeypatch.setenv("OPERADIC_BIANCHI_SEED", "pi")
        code, _, err = run(capsys, "verify", "matrix-lax")
        assert code == 2 and "OPERADIC_BIANCHI_SEED" in err

    def test_bad_fraction_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tables", "bianchi", "--omega", "fast"])
        assert exc.value.code == 2

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "operadyn.cli", "tables", "bianchi",
         "--type", "I", "--format", "csv"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "I,,0,0,0,0,0,0,0,0,0"
