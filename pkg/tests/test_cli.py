import json
import subprocess
import sys

import pytest
from hypothesis import given

from autcentral import fingrp as fg
from autcentral.cli import ParseError, main, parse_abelian, render
from autcentral.fgab import FgAbelian, normalize
from oracles import abelians


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_examples(self):
        assert parse_abelian("C4 x C2 x Z^2") == FgAbelian(2, ((2, (2, 1)),))
        assert parse_abelian("Z") == FgAbelian(1)
        assert parse_abelian("C6") == normalize([6])
        assert parse_abelian("  C2x C3 xZ  ") == normalize([6, float("inf")])
        assert parse_abelian("1") == FgAbelian()
        assert parse_abelian("C1") == FgAbelian()

    @pytest.mark.parametrize("text, position", [
        ("C0", 1), ("Z^0", 2), ("", 0), ("C4 x", 4), ("C4 C2", 3), ("c4", 0), ("C4 * C2", 3), ("Cx", 0),
    ])
    def test_errors(self, text, position):
        with pytest.raises(ParseError) as exc:
            parse_abelian(text)
        assert exc.value.position == position and exc.value.code == "PARSE_ERROR"

    @given(abelians())
    def test_round_trip(self, A):
        assert parse_abelian(render(A)) == A

    def test_render_of_parse_normalizes(self):
        assert render(parse_abelian("C2 x C4 x Z x C3")) == "C4 x C2 x C3 x Z"


class TestCommands:
    def test_hom(self, capsys):
        code, out, _ = run(capsys, "hom", "C4 x C2", "C8")
        assert code == 0 and out.strip() == "C4 x C2"

    def test_hom_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "hom", "Z^2", "C6")
        doc = json.loads(out)
        assert code == 0 and doc["hom"]["parts"] == {"2": [1, 1], "3": [1, 1]}

    def test_iso(self, capsys):
        assert run(capsys, "iso", "C6", "C2 x C3")[1].strip() == "true"
        assert run(capsys, "iso", "C4 x C2", "C8")[1].strip() == "false"

    def test_decide(self, capsys):
        code, out, _ = run(capsys, "decide", "--class", "torsion", "--gl", "C2", "--gn", "C4", "--m", "C2")
        assert code == 0 and out.strip() == "holds COND_II r_2=1"
        code, out, _ = run(capsys, "decide", "--class", "tf", "--gl", "1", "--gn", "1", "--m", "Z^2",
                           "--format", "json")
        doc = json.loads(out)
        assert doc["holds"] and doc["flags"] == ["DEGENERATE", "GN_TRIVIAL"] and doc["literal_holds"] is False

    def test_decide_precondition(self, capsys):
        code, _, err = run(capsys, "decide", "--class", "torsion", "--gl", "C4", "--gn", "C2", "--m", "C2")
        assert code == 2 and "PRECONDITION_VIOLATED" in err

    def test_parse_error_exit(self, capsys):
        code, _, err = run(capsys, "hom", "C0", "C2")
        assert code == 2 and "PARSE_ERROR" in err

    def test_bad_arguments(self, capsys):
        assert run(capsys, "decide", "--gl", "C2")[0] == 2
        assert run(capsys, "nonsense")[0] == 2

    def test_snf(self, capsys, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("3 3\n2 4 4\n-6 6 12\n10 -4 -16\n")
        code, out, _ = run(capsys, "--format", "json", "snf", str(path))
        doc = json.loads(out)
        assert code == 0 and doc["diagonal"] == [2, 6, 12]
        assert doc["cokernel"] == "C4 x C2 x C2 x C3 x C3"

    def test_snf_bad_file(self, capsys, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("2 2\n1 2 3\n")
        assert run(capsys, "snf", str(path))[0] == 2
        assert run(capsys, "snf", str(tmp_path / "missing.txt"))[0] == 2

    def test_group_commands(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--format", "json", "group", "info", "dihedral(16)")
        doc = json.loads(out)
        assert code == 0 and doc["order"] == 16 and doc["nilpotency_class"] == 3
        doc = json.loads(run(capsys, "--format", "json", "group", "aut", "quaternion(8)")[1])
        assert doc["aut_order"] == 24 and doc["inn_order"] == 4
        doc = json.loads(run(capsys, "--format", "json", "group", "series", "dihedral(16)")[1])
        assert doc["upper_central"] == [1, 2, 4, 16] and doc["lower_central"] == [16, 4, 2, 1]
        doc = json.loads(run(capsys, "--format", "json", "group", "var", "cyclic(4)")[1])
        assert doc["var_order"] == 2 and doc["var_equals_inn"] is False
        doc = json.loads(run(capsys, "--format", "json", "group", "abs-center", "quaternion(8)")[1])
        assert doc["order"] == 2 and doc["equals_center"] is True

    def test_group_file(self, capsys, tmp_path):
        path = tmp_path / "q8.json"
        fg.dump_group(fg.quaternion(8), path)
        code, out, _ = run(capsys, "group", "info", str(path))
        assert code == 0 and "order" in out

    def test_group_bad_input(self, capsys, tmp_path):
        assert run(capsys, "group", "info", "dihedral(7)")[0] == 2
        assert run(capsys, "group", "info", str(tmp_path / "none.json"))[0] == 2
        assert run(capsys, "--max-order", "8", "group", "aut", "dihedral(16)")[0] == 2

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "attar", "direct_product(dihedral(8), cyclic(2))")
        assert code == 0 and "disagreements: 0" in out
        code, out, _ = run(capsys, "--format", "json", "verify", "cor29", "cyclic(4)")
        doc = json.loads(out)
        assert code == 0 and doc["cases"][0]["predicted"] is False
        code, out, _ = run(capsys, "verify", "all", "quaternion(8)")
        assert code == 0

    def test_sweep(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "sweep", "--primes", "2", "--max-length", "2",
                           "--max-exponent", "2", "--max-free-rank", "1", "--include-trivial-gn")
        doc = json.loads(out)
        assert code == 0 and doc["summary"]["LEMMA21_SWEEP"]["disagree"] == 0
        assert doc["summary"]["LEMMA21_SWEEP"]["degenerate"] > 0

    def test_corpus_manifest(self, capsys, tmp_path):
        manifest = tmp_path / "m.txt"
        manifest.write_text("builtin:quaternion(8)\nbuiltin:cyclic(4)\n")
        code, out, _ = run(capsys, "corpus", str(manifest))
        assert code == 0 and "disagreements: 0" in out

    def test_json_stable(self, capsys, tmp_path):
        manifest = tmp_path / "m.txt"
        manifest.write_text("builtin:dihedral(8)\nbuiltin:abelian(2, 2)\n")
        a = run(capsys, "--format", "json", "corpus", str(manifest))[1]
        b = run(capsys, "--format", "json", "corpus", str(manifest))[1]
        assert a == b

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        from autcentral import verifier as vf

        def broken(G, max_order=64):
            return vf.Case("ATTAR", G.name, "", True, False)

        monkeypatch.setattr(vf, "verify_attar", broken)
        code, out, _ = run(capsys, "verify", "attar", "dihedral(8)")
        assert code == 1 and "DISAGREE" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "autcentral", "hom", "C4", "C2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "C2"
