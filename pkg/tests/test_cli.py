import subprocess
import sys

import pytest

from latdist.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_and_count_list(capsys, tmp_path):
    path = tmp_path / "sq5.txt"
    assert call(capsys, "gen", "--family", "square", "--s", "5", "--out", str(path))[0] == 0
    code, out, _ = call(capsys, "count", "--in", str(path), "--list")
    assert code == 0
    assert out.splitlines() == ["n=25", "k=14",
                                "squared_distances=1,2,4,5,8,9,10,13,16,17,18,20,25,32"]


@pytest.mark.parametrize("argv,n,k", [
    (["--family", "hex", "--s", "4"], 37, 15),
    (["--family", "tri-disk", "--sq-radius", "12"], 43, 18),
    (["--family", "sq-disk", "--sq-radius", "2"], 9, 5),
])
def test_gen_families(capsys, tmp_path, argv, n, k):
    path = tmp_path / "c.txt"
    assert call(capsys, "gen", *argv, "--out", str(path))[0] == 0
    code, out, _ = call(capsys, "--threads", "2", "count", "--in", str(path))
    assert code == 0 and out.splitlines() == [f"n={n}", f"k={k}"]


def test_gen_to_stdout(capsys):
    code, out, _ = call(capsys, "gen", "--family", "hex", "--s", "2")
    assert code == 0 and out.startswith("lattice: tri\n")


def test_table1(capsys):
    code, out, _ = call(capsys, "table1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "family,s,n,k" and len(lines) == 61
    assert "hex,23,1519,440" in lines and "square,39,1521,623" in lines


def test_table2_markdown_and_file(capsys, tmp_path):
    code, out, _ = call(capsys, "table2", "--rows", "2", "--format", "markdown")
    assert code == 0 and out.startswith("| s | n1 |")
    path = tmp_path / "t2.csv"
    assert call(capsys, "table2", "--rows", "1", "--out", str(path))[0] == 0
    assert path.read_text().splitlines()[1].startswith("23,1519,440,39,1521,623,1519,441,1513,601")


def test_constants(capsys):
    code, out, _ = call(capsys, "constants", "--prime-bound", "1000000")
    vals = dict(line.split("=") for line in out.splitlines())
    assert code == 0
    assert abs(float(vals["c"]) - 0.764223654) < 1e-6
    assert abs(float(vals["ratio"]) - 0.72402) < 1e-4


def test_verify_theorem_baseline(capsys):
    code, out, _ = call(capsys, "verify-theorem")
    assert code == 1
    assert out.splitlines()[-1] == "gaps: 18,19,20,21,22,30,31,32,33,45"


def test_verify_theorem_custom_witnesses(capsys, tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("8 19 H_3\n18 43\n21 55\n29 70\n40 102\n15 37\n23 61\n34 91\n"
                    "46 127\n59 169\n7 16\n9 21\n10 25\n11 27\n13 31\n")
    code, out, _ = call(capsys, "verify-theorem", "--witnesses", str(path))
    assert code == 0 and out.endswith("gaps: none\n")


def test_verify_theorem_search(capsys):
    code, out, _ = call(capsys, "verify-theorem", "--search-missing", "--budget-seconds", "300")
    assert code == 0
    searches = [line for line in out.splitlines() if line.startswith("search ")]
    assert len(searches) == 4 and all("target_met=true" in line for line in searches)
    assert out.endswith("gaps: none\n")


def test_search(capsys, tmp_path):
    path = tmp_path / "w.txt"
    code, out, _ = call(capsys, "search", "--k", "18", "--n-min", "43", "--out", str(path))
    assert code == 0 and "target_met=true k=18 n=43" in out
    code, out, _ = call(capsys, "count", "--in", str(path))
    assert out.splitlines() == ["n=43", "k=18"]
    code, out, _ = call(capsys, "search", "--k", "5", "--n-min", "40", "--budget-seconds", "20")
    assert code == 1 and "target_met=false" in out


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["gen", "--family", "hex"], ["gen", "--family", "tri-disk"],
    ["--threads", "0", "table1"], ["count", "--in", "/nonexistent/file"],
    ["gen", "--family", "hex", "--s", "0"], ["table2", "--rows", "0"],
])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_resource_guard_exit(capsys, tmp_path):
    path = tmp_path / "big.txt"
    path.write_text("lattice: sq\n" + "".join(f"{i} 0\n" for i in range(100_001)))
    code, _, err = call(capsys, "count", "--in", str(path))
    assert code == 3 and err.startswith("error:")


def test_help_and_module_entry():
    res = subprocess.run([sys.executable, "-m", "latdist", "--help"], capture_output=True,
                         text=True)
    assert res.returncode == 0 and "verify-theorem" in res.stdout


def test_output_is_byte_identical(capsys):
    first = call(capsys, "--threads", "1", "table2", "--rows", "5")[1]
    second = call(capsys, "--threads", "4", "table2", "--rows", "5")[1]
    assert first == second
