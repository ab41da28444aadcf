import io
import json
import subprocess
import sys

import pytest

from pcore.abacus import RowMultiplicities, row_multiplicities_to_bead_multiplicities, size_from_bead_multiplicities
from pcore.cli import main
from pcore.tables import complete_from_first_half, format_split, split_point

from conftest import GOLDEN


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_largest_text():
    code, text = run("largest", "--p", "5")
    assert code == 0
    assert "(4, 2 ; 2, 3)" in text
    assert "198" in text


def test_largest_bad_p(capsys):
    code, _ = run("largest", "--p", "4")
    assert code == 2
    assert "odd prime" in capsys.readouterr().err


def test_largest_json_schema():
    code, text = run("largest", "--p", "43", "--format", "json")
    assert code == 0
    record = json.loads(text)
    assert set(record) == {"p", "row_multiplicities", "bead_multiplicities", "length", "size", "threshold"}
    assert record["size"] == record["threshold"] == 171105947
    m = RowMultiplicities(43, tuple(record["row_multiplicities"]))
    b = row_multiplicities_to_bead_multiplicities(m)
    assert list(b.values) == record["bead_multiplicities"]
    assert size_from_bead_multiplicities(b) == record["size"]
    assert sum(b.values) == record["length"]


def test_largest_json_with_parts():
    code, text = run("largest", "--p", "5", "--format", "json", "--parts")
    record = json.loads(text)
    assert sum(record["parts"]) == 198 and len(record["parts"]) == record["length"]


def test_split_notation():
    assert [split_point(p) for p in (3, 5, 7, 43)] == [1, 2, 3, 21]
    assert format_split((2, 1)) == "2 ; 1"
    assert format_split((6, 2, 5, 5, 2, 5)) == "6, 2, 5 ; 5, 2, 5"


def test_complete_from_first_half():
    assert complete_from_first_half(7, (6, 2, 5)) == (6, 2, 5, 5, 2, 5)
    assert complete_from_first_half(3, (2,)) == (2, 1)


def test_tables_csv_matches_golden(tmp_path):
    code, _ = run("tables", "--max-p", "43", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "table1.csv").read_bytes() == (GOLDEN / "table1.csv").read_bytes()

    published = (GOLDEN / "table2_published.csv").read_text().splitlines()
    produced = (tmp_path / "table2.csv").read_text().splitlines()
    assert produced[0] == published[0] + ",note"
    for pub, got in zip(published[1:], produced[1:]):
        got_cells = got.split(",")
        if got_cells[0] == "7":
            assert got == "7,1326,1726,2701,paper_table_discrepancy"
            assert pub == "7,326,1726,2701"
        else:
            assert got == pub + ","
    assert len(produced) == len(published)


def test_tables_paper_faithful(tmp_path):
    run("tables", "--max-p", "7", "--out", str(tmp_path), "--paper-faithful")
    rows = (tmp_path / "table2.csv").read_text().splitlines()
    assert rows[-1] == "7,326,1726,2701,paper_table_discrepancy"


def test_tables_are_byte_stable(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run("tables", "--max-p", "43", "--out", str(a))
    run("tables", "--max-p", "43", "--out", str(b))
    for name in ("table1.csv", "table2.csv"):
        data = (a / name).read_bytes()
        assert data == (b / name).read_bytes()
        assert b"\r" not in data and data.isascii()


def test_tables_small(tmp_path):
    code, _ = run("tables", "--max-p", "3", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "table2.csv").read_text() == "p,explicit,largest,upper_bound\n3,10,10,10\n"


def test_tables_no_primes(capsys):
    code, _ = run("tables", "--max-p", "2")
    assert code == 2


def test_tables_unwritable_path(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _ = run("tables", "--max-p", "5", "--out", str(blocker / "sub"))
    assert code == 2
    assert str(blocker) in capsys.readouterr().err


def test_tables_text():
    code, text = run("tables", "--max-p", "7", "--format", "text")
    assert code == 0
    assert "(4, 2 ; 2, 3)" in text
    assert "1326" in text and "326" in text


def test_verify_with_oracle():
    code, text = run("verify", "--p", "3,5,7", "--oracle")
    assert code == 0
    assert "FAIL" not in text
    assert "exhaustive search agrees with solver" in text


def test_verify_property_suite_p43():
    code, text = run("verify", "--p", "43")
    assert code == 0
    assert "row multiplicities match published table" in text


def test_verify_bad_p():
    assert run("verify", "--p", "4")[0] == 2


def test_verify_refuses_big_oracle():
    assert run("verify", "--p", "13", "--oracle")[0] == 2


def test_verify_reports_failure(monkeypatch):
    from pcore import checks, cli

    def broken(p):
        yield checks.CheckResult(p, "always fails", False)

    monkeypatch.setattr(cli, "property_checks", broken)
    code, text = run("verify", "--p", "5")
    assert code == 1
    assert "verification failed: p=5 always fails" in text


def test_render_p5():
    code, text = run("render", "--p", "5")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 11
    rows = [line.split()[0] for line in lines]
    residues = tuple(int(line.split()[1]) for line in lines)
    assert rows[0] == ".oooo" and rows[-1] == "....o"
    assert residues == (1, 2, 3, 4, 1, 3, 1, 4, 3, 2, 1)


def test_render_p3():
    assert [line.split()[0] for line in run("render", "--p", "3")[1].splitlines()] == [".oo", ".oo", "..o"]


def test_render_p2():
    assert run("render", "--p", "2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pcore", "largest", "--p", "7"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "1726" in proc.stdout
