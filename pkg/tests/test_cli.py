import json
import subprocess
import sys

import pytest

from hiernet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestGenerate:
    def test_edgelist(self, capsys):
        code, out, _ = run(capsys, "generate", "-n", "4", "-k", "2", "--format", "edgelist")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 37 and lines[0].endswith("edges=36")

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "generate", "-n", "3", "-k", "2", "--format", "dot")
        assert code == 0 and out.count(" -- ") == 14
        assert sum(1 for line in out.splitlines() if line.strip().endswith('";') and "--" not in line) == 9

    def test_cap(self, capsys):
        code, _, err = run(capsys, "generate", "-n", "10", "-k", "9")
        assert code == 2 and "analytic" in err

    def test_to_file(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        code, out, _ = run(capsys, "generate", "-n", "2", "-k", "1", "-o", str(path))
        assert code == 0 and out == ""
        assert path.read_text() == "# hiernet n=2 k=1 vertices=2 edges=1\n0 1\n"


class TestStats:
    def test_both_matches(self, capsys):
        code, out, _ = run(capsys, "stats", "-n", "3", "-k", "2", "--mode", "both", "--json")
        doc = json.loads(out)
        assert code == 0 and all(doc["match"].values())

    def test_analytic_large(self, capsys):
        code, out, _ = run(capsys, "stats", "-n", "5", "-k", "8", "--mode", "analytic", "--json")
        assert code == 0 and json.loads(out)["order"] == 390625

    def test_tree(self, capsys):
        code, out, _ = run(capsys, "stats", "-n", "2", "-k", "3", "--mode", "both", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["size"] == 7 and doc["triangles"] == 0

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "stats", "-n", "3", "-k", "2")
        assert code == 0 and "size: 14" in out and "3/7" in out

    def test_empirical_cap(self, capsys):
        code, _, _ = run(capsys, "stats", "-n", "5", "-k", "9", "--mode", "empirical")
        assert code == 2


class TestVerify:
    @pytest.mark.parametrize("n,k", [(3, 3), (4, 2)])
    def test_pass(self, capsys, n, k):
        code, out, _ = run(capsys, "verify", "-n", str(n), "-k", str(k))
        assert code == 0 and "FAIL" not in out and out.count("PASS") == 5

    def test_bad_params(self, capsys):
        code, out, err = run(capsys, "verify", "-n", "1", "-k", "2")
        assert code == 2 and out == "" and "n must be" in err

    def test_failure_exit(self, capsys, monkeypatch):
        from hiernet import verify

        def broken(p, g):
            return verify.CheckResult("oracle vs BFS", False, "01 -> 10: oracle 2, BFS 3")

        monkeypatch.setattr(verify, "CHECKS", [broken])
        code, out, err = run(capsys, "verify", "-n", "3", "-k", "2")
        assert code == 1 and "FAIL" in out and "01 -> 10" in err


class TestDist:
    def test_examples(self, capsys):
        assert run(capsys, "dist", "-n", "3", "-k", "2", "--from", "01", "--to", "10")[:2] == (0, "3\n")
        assert run(capsys, "dist", "-n", "3", "-k", "2", "--from", "12", "--to", "21")[:2] == (0, "2\n")
        assert run(capsys, "dist", "-n", "3", "-k", "2", "--from", "00", "--to", "00")[:2] == (0, "0\n")

    def test_check_bfs(self, capsys):
        code, out, err = run(capsys, "dist", "-n", "4", "-k", "3", "--from", "010", "--to", "101", "--check-bfs")
        assert code == 0 and out == "5\n" and "agrees" in err

    def test_comma_labels(self, capsys):
        code, out, _ = run(capsys, "dist", "-n", "12", "-k", "2", "--from", "0,11", "--to", "11,0")
        assert code == 0 and out == "3\n"

    @pytest.mark.parametrize("label", ["0a", "013", "03"])
    def test_bad_label(self, capsys, label):
        code, _, _ = run(capsys, "dist", "-n", "3", "-k", "2", "--from", label, "--to", "00")
        assert code == 2

    def test_bfs_over_cap(self, capsys):
        code, out, _ = run(capsys, "dist", "-n", "4", "-k", "3", "--from", "000", "--to", "111", "--check-bfs", "--cap", "10")
        assert code == 2 and out == "1\n"


class TestSweep:
    def test_grid(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n-range", "4:20:2", "--k-range", "1:6", "--metric", "clustering")
        assert code == 0 and len(out.splitlines()) == 55

    def test_transitivity(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n-range", "4:4:1", "--k-range", "1:5", "--metric", "transitivity")
        values = [float(line.split(",")[2]) for line in out.splitlines()[1:]]
        assert code == 0 and len(values) == 5 and values == sorted(values, reverse=True)

    def test_gamma_marker(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n-range", "2:2:1", "--metric", "gamma_theory")
        assert code == 0 and out.splitlines()[1] == "2,1,error"

    @pytest.mark.parametrize("rng", ["4:20", "a:b:c", "20:4:1"])
    def test_bad_range(self, capsys, rng):
        assert run(capsys, "sweep", "--n-range", rng, "--metric", "size")[0] == 2


def test_usage_error_is_2():
    with pytest.raises(SystemExit) as exc:
        main(["generate", "-n", "x", "-k", "2"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hiernet", "dist", "-n", "3", "-k", "2", "--from", "01", "--to", "10"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
