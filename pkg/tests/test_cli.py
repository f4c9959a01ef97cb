"""The command-line surface: verdicts, formats, exit codes."""

import json

import pytest

from superelliptic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEq:
    def test_rotation_torsion(self, capsys):
        code, out, _ = run(capsys, "eq", "sphere", "r1^(2n+2)", "", "--n", "2")
        assert code == 0
        assert out.splitlines()[0] == "true"
        assert "psi(u) = [1,2,3,4,5,6]" in out

    def test_braid_relation_disk(self, capsys):
        code, out, _ = run(capsys, "eq", "disk", "s1 s2 s1", "s2 s1 s2", "--n", "2")
        assert code == 0 and out.startswith("true")

    def test_false_verdict(self, capsys):
        code, out, _ = run(capsys, "eq", "sphere", "s1", "", "--n", "1")
        assert code == 0 and out.startswith("false")

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "eq", "disk", "zz", "", "--n", "1")
        assert code == 2 and "error" in err

    def test_budget_exit_3(self, capsys):
        code, _, err = run(
            capsys, "--budget-letters", "10", "eq", "disk",
            " ".join(["s1"] * 200), "", "--n", "2",
        )
        assert code == 3 and "budget" in err


class TestLiftable:
    def test_word_liftable(self, capsys):
        code, out, _ = run(capsys, "liftable", "word", "h1", "--n", "2")
        assert code == 0
        assert "liftable" in out and "preserving" in out

    def test_word_not_liftable(self, capsys):
        code, out, _ = run(capsys, "liftable", "word", "s1", "--n", "2")
        assert code == 0
        assert "not liftable" in out and "neither" in out

    def test_curve(self, capsys):
        code, out, _ = run(capsys, "liftable", "curve", "x1 x2", "--n", "2", "--k", "3")
        assert code == 0
        assert "lifts" in out and "0 mod 3" in out

    def test_curve_nonliftable(self, capsys):
        code, out, _ = run(capsys, "liftable", "curve", "x1", "--n", "2", "--k", "3")
        assert code == 0 and "does not lift" in out

    def test_k2_warns(self, capsys):
        _, _, err = run(capsys, "liftable", "word", "h1", "--n", "1", "--k", "2")
        assert "k = 2" in err


class TestCover:
    def test_info(self, capsys):
        code, out, _ = run(capsys, "cover", "info", "--n", "2", "--k", "3")
        assert code == 0
        assert "genus: 4" in out and "euler_characteristic: -6" in out

    def test_info_json(self, capsys):
        code, out, _ = run(capsys, "cover", "info", "--n", "1", "--k", "3", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["h1_rank"] == 4
        assert len(data["intersection_form"]) == 4
        assert len(data["standard_symplectic_change"]) == 4

    def test_matrix_export(self, capsys):
        code, out, _ = run(capsys, "cover", "matrix", "zeta", "--n", "1", "--k", "3")
        M = json.loads(out)
        assert code == 0
        assert len(M) == 4 and all(len(row) == 4 for row in M)
        code, out, _ = run(capsys, "cover", "matrix", "h1", "--n", "1", "--k", "3")
        assert code == 0 and json.loads(out)

    def test_matrix_unknown_name(self, capsys):
        code, _, err = run(capsys, "cover", "matrix", "q7", "--n", "1", "--k", "3")
        assert code == 2 and "error" in err


class TestVerifyAll:
    def test_small_run_exit_0(self, capsys):
        code, out, _ = run(
            capsys, "verify-all", "--n", "1", "--k", "3",
            "--liftability-samples", "50",
        )
        assert code == 0
        assert "claims:" in out and "0 failed" in out

    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys, "verify-all", "--n", "1", "--k", "3", "--json",
            "--liftability-samples", "20",
        )
        assert code == 0
        data = json.loads(out)
        assert data["header"]["n"] == 1
        assert all(c["status"] != "fail" for c in data["claims"])

    def test_out_file_write_then_rename(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, _, _ = run(
            capsys, "verify-all", "--n", "1", "--k", "3", "--json",
            "--out", str(target), "--liftability-samples", "20",
        )
        assert code == 0
        data = json.loads(target.read_text())
        assert data["claims"]
        assert not list(tmp_path.glob("*.tmp"))

    def test_over_bound_claims_skipped(self, capsys):
        code, out, _ = run(
            capsys, "verify-all", "--n", "9", "--k", "3", "--json",
            "--liftability-samples", "5",
        )
        assert code == 0
        data = json.loads(out)
        assert any(c["status"] == "skipped" for c in data["claims"])

    def test_usage_error_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify-all"])  # missing --n
        assert exc.value.code == 2
