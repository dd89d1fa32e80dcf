import io
import subprocess
import sys

import pytest

from prefseq import format_preference_table, prefer_higher, prefer_opposite_binary
from prefseq.cli import main

from golden import BINARY4, LOOPED_SEQUENCE, LOOPED_TABLE_TEXT


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def tables(tmp_path):
    paths = {}
    for name, text in [
        ("looped", LOOPED_TABLE_TEXT),
        ("higher4", format_preference_table(prefer_higher(4))),
        ("opposite", format_preference_table(prefer_opposite_binary())),
        ("broken", "t=3 span=1\n0: 1 1 2\n1: 0 1 2\n2: 0 1 2\n"),
    ]:
        path = tmp_path / f"{name}.pref"
        path.write_text(text)
        paths[name] = str(path)
    return paths


def test_generate_prefer_higher_wrap():
    assert run("generate", "--t", "3", "--order", "2", "--prefer-higher", "--wrap") == (0, "00221201100\n")


def test_generate_table_with_initial(tables, capsys):
    code, out = run("generate", "--t", "3", "--order", "3", "--table", tables["looped"], "--initial", "001")
    assert (code, out) == (0, LOOPED_SEQUENCE + "\n")
    assert "warning" in capsys.readouterr().err


def test_generate_prefer_opposite_stats():
    code, out = run("generate", "--t", "2", "--order", "3", "--prefer-opposite", "--stats")
    assert code == 3
    lines = out.splitlines()
    assert lines[0] == "000101100"
    assert "halt length: 7" in lines
    assert "missing windows: 111" in lines


def test_generate_errors(tables, capsys):
    assert run("generate", "--order", "2", "--prefer-higher")[0] == 2
    assert run("generate", "--t", "2", "--order", "3", "--table", tables["broken"])[0] == 2
    assert "line 2" in capsys.readouterr().err
    assert run("generate", "--t", "2", "--order", "3", "--prefer-higher", "--initial", "0020")[0] == 2
    assert run("generate", "--t", "2", "--order", "30", "--prefer-higher", "--max-windows", "100")[0] == 2


def test_check_complete(tables):
    assert run("check", "--table", tables["higher4"]) == (0, "complete\n")


def test_check_looped_table(tables):
    code, out = run("check", "--table", tables["looped"])
    assert code == 3
    assert out.splitlines()[0] == "incomplete"
    assert "cycle: 00 → 01 → 10 → 00" in out


def test_check_prefer_opposite(tables):
    code, out = run("check", "--table", tables["opposite"])
    assert code == 3
    assert "self-loop: 1 → 1" in out


def test_check_span0_wrong_last(tmp_path):
    path = tmp_path / "bad0.pref"
    path.write_text("t=3 span=0\n-: 0 2 1\n")
    code, out = run("check", "--table", str(path))
    assert code == 3
    assert "least preferred digit after - is 1, not 0" in out


def test_check_missing_file(capsys):
    assert run("check", "--table", "/nonexistent/x.pref")[0] == 2


def test_complexity_ford():
    code, out = run("complexity", "--t", "2", "--order", "4", "--seq", BINARY4[3])
    assert code == 0
    assert out.splitlines()[0] == "complexity 0"


def test_complexity_seq6_witness(tmp_path):
    path = tmp_path / "seq6.txt"
    path.write_text(BINARY4[6] + "\n")
    code, out = run("complexity", "--t", "2", "--order", "4", "--seq", str(path))
    assert code == 0
    assert out.splitlines()[0] == "complexity 2"
    assert "span 1: infeasible" in out and "span 2: feasible" in out
    assert out.endswith("witness:\nt=2 span=2\n00: 1 0\n01: 0 1\n10: 1 0\n11: 1 0\n")


def test_complexity_full_span():
    assert run("complexity", "--t", "2", "--order", "4", "--seq", BINARY4[1])[1].startswith("complexity 3\n")


def test_complexity_rejects_non_de_bruijn(capsys):
    assert run("complexity", "--t", "2", "--order", "4", "--seq", "0000100110101111001")[0] == 2
    assert "not a de Bruijn" in capsys.readouterr().err


def test_census():
    code, out = run("census", "--t", "2", "--order", "4")
    assert code == 0
    assert out == "span 0: 1, span 1: 0, span 2: 1, span 3: 14, total 16\n"


def test_census_modes():
    out = run("census", "--t", "2", "--order", "4", "--modes")[1]
    assert "N_1 paper-literal: 1, corrected: 0, census: 0 (modes disagree)" in out
    assert "N_3 paper-literal: 14, corrected: 14, census: 14\n" in out


def test_census_guard():
    assert run("census", "--t", "4", "--order", "3")[0] == 2


def test_count():
    code, out = run("count", "--t", "2", "--i", "1")
    assert code == 0
    assert "N_1 paper-literal: 1, corrected: 0 (modes disagree)" in out
    assert "M(3,2) = 24" in run("count", "--t", "3", "--i", "2")[1]
    assert run("count", "--t", "2", "--i", "3", "--mode", "corrected")[1].splitlines()[-1] == "N_3 corrected: 14"


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("generate")[0] == 2
    assert run("count", "--t", "1", "--i", "2")[0] == 2


def test_output_is_deterministic(tables):
    first = run("check", "--table", tables["looped"])
    assert all(run("check", "--table", tables["looped"]) == first for _ in range(3))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "prefseq", "generate", "--t", "2", "--order", "3", "--prefer-opposite"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3
    assert proc.stdout == "000101100\n"
