from __future__ import annotations

import subprocess
import sys

import pytest

from cliquesuite import parse_dimacs, write_dimacs
from cliquesuite.cli import EXIT_IO, EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE, main
from conftest import complete


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.clq"
    path.write_text(write_dimacs(complete(5)))
    return path


class TestSolve:
    def test_file(self, capsys, k5_file):
        code, out, err = run(capsys, "solve", "MC", str(k5_file))
        assert code == EXIT_OK
        assert "instance: k5\n" in out and "size: 5\n" in out and "completed: true\n" in out
        assert err.startswith("time_ms: ")

    def test_constructed(self, capsys):
        code, out, _ = run(capsys, "solve", "MCQ3", "hamming6-2")
        assert code == EXIT_OK and "size: 32\n" in out

    def test_repeatable(self, capsys):
        first = run(capsys, "solve", "MCSb2", "johnson8-2-4")[1]
        assert run(capsys, "solve", "MCSb2", "johnson8-2-4")[1] == first

    def test_timeout(self, capsys):
        code, out, _ = run(capsys, "solve", "MC", "hamming8-4", "0.001")
        assert code == EXIT_TIMEOUT and "completed: false\n" in out

    def test_bad_algorithm(self, capsys, k5_file):
        code, _, err = run(capsys, "solve", "MCQ9", str(k5_file))
        assert code == EXIT_USAGE and "MCQ9" in err

    def test_missing_instance(self, capsys, tmp_path):
        code, _, err = run(capsys, "solve", "MC", str(tmp_path / "absent.clq"))
        assert code == EXIT_IO

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.clq"
        path.write_text("e 1 2\n")
        assert run(capsys, "solve", "MC", str(path))[0] == EXIT_IO


class TestGen:
    def test_gnp_header(self, capsys):
        code, out, _ = run(capsys, "gen", "gnp", "100", "0.9", "3")
        assert code == EXIT_OK
        g = parse_dimacs(out)
        header = next(line for line in out.splitlines() if line.startswith("p "))
        assert header == f"p edge 100 {g.edge_count}"
        assert abs(g.edge_count - 0.9 * 4950) < 3 * (4950 * 0.09) ** 0.5

    def test_small_world(self, capsys):
        out = run(capsys, "gen", "smallworld", "1000", "100", "0.0", "1")[1]
        assert "\np edge 1000 100000\n" in out

    def test_k_regular(self, capsys):
        g = parse_dimacs(run(capsys, "gen", "kregular", "200", "160", "4")[1])
        assert set(g.degree) == {160}

    def test_deterministic(self, capsys):
        assert run(capsys, "gen", "gnp", "30", "0.5", "9")[1] == run(capsys, "gen", "gnp", "30", "0.5", "9")[1]

    @pytest.mark.parametrize(
        "argv",
        [
            ("gen", "gnp", "10", "0.5"),
            ("gen", "gnp", "10", "2.0", "1"),
            ("gen", "kregular", "5", "3", "1"),
            ("gen", "smallworld", "10", "5", "0.1", "1"),
            ("gen", "gnp", "ten", "0.5", "1"),
        ],
    )
    def test_bad_parameters(self, capsys, argv):
        assert run(capsys, *argv)[0] == EXIT_USAGE


class TestBatch:
    ARGS = ("batch", "--n", "30", "--p-from", "0.3", "--p-to", "0.7", "--p-step", "0.2", "--samples", "2",
            "--algorithms", "MCSa1,BBMC1", "--seed", "4")

    def test_output(self, capsys):
        code, out, _ = run(capsys, *self.ARGS)
        lines = out.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 1 + 3 * 2 * 2 + 3 * 2

    def test_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, *self.ARGS, "--output", str(a))
        run(capsys, *self.ARGS, "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_bad_algorithm_list(self, capsys):
        assert run(capsys, "batch", "--n", "10", "--p-from", "0.5", "--algorithms", "MCSa1,BOGUS")[0] == EXIT_USAGE

    def test_argparse_errors_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["batch"])
        assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cliquesuite", "solve", "MCSa1", "hamming6-4"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "nodes: 82\n" in proc.stdout and "size: 4\n" in proc.stdout
