import io
import json
import subprocess
import sys

import pytest

from sigbasis.cli import main
from sigbasis.textio import parse_system

EXAMPLE = "vars: Z, Y, X\nX^2*Z^3 + 3*X^2*Y\nX*Y*Z + 2*Y^2\n"


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE)
    return str(path)


def test_gb_prints_worked_example_basis(example_file, capsys):
    assert main(["gb", example_file]) == 0
    out = capsys.readouterr().out
    # factors print in declaration order, so compare as polynomials
    got = parse_system("vars: Z, Y, X\n" + out).polynomials
    expected = parse_system("vars: Z, Y, X\n" + "\n".join([
        "X^2*Z^3 + 3*X^2*Y",
        "X*Y*Z + 2*Y^2",
        "-4*Y^3*Z - 3*X^2*Y^2",
        "3/4*X^3*Y^2 - 2*Y^4",
    ])).polynomials
    assert len(got) == 4 and set(got) == set(expected)


def test_gb_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    assert main(["gb", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_gb_stats_and_reduced(example_file, capsys):
    assert main(["gb", example_file, "--reduced", "--stats", "--algorithm", "buchberger", "--order", "lex"]) == 0
    *polys, stats = capsys.readouterr().out.splitlines()
    record = json.loads(stats)
    assert record["algorithm"] == "buchberger" and record["order"] == "lex"
    assert record["basis_size"] == len(polys)


def test_gb_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("vars: x, y\nx^2 - y\nx*y - 1\n"))
    assert main(["gb", "-", "--reduced"]) == 0
    assert capsys.readouterr().out.splitlines()


def test_verify_exit_codes(example_file, capsys, monkeypatch):
    assert main(["verify", example_file, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert main(["verify", example_file, "--module-order", "top", "--rewrite", "add"]) == 0
    assert "PASS" in capsys.readouterr().out

    import sigbasis.verify as verify

    monkeypatch.setattr(verify, "autoreduce", lambda G, groebner=False: list(G))
    assert main(["verify", example_file]) == 1


def test_bench_json(capsys):
    assert main(["bench", "--family", "cyclic", "--n", "5", "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["zero_reductions"] == 0 and record["family"] == "cyclic" and record["n"] == 5
    assert main(["bench", "--family", "noon", "--n", "2"]) == 0
    assert "zero-reductions" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    [],
    ["gb"],
    ["frobnicate"],
    ["gb", "x.txt", "--order", "weird"],
    ["bench", "--family", "cyclic"],
    ["bench", "--family", "cyclic", "--n", "1"],
    ["bench", "--family", "nope", "--n", "3"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_parse_error_and_missing_file_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("x + \n")
    assert main(["gb", str(bad)]) == 2
    assert "line 1, column" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.txt")]) == 2


def test_module_entry_point(example_file):
    out = subprocess.run([sys.executable, "-m", "sigbasis", "gb", example_file],
                         capture_output=True, text=True, check=True)
    assert len(out.stdout.splitlines()) == 4
