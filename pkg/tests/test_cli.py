from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from stabminors.census import FIELDS, census_document, to_json, to_table, validate_document
from stabminors.cli import main
from stabminors.verify import parse_printed_point


def run(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def field(out: str, name: str) -> str:
    for line in out.splitlines():
        if line.startswith(name + ":"):
            return line.split(":", 1)[1].strip()
    raise KeyError(name)


def table_rows(out: str) -> list[list[str]]:
    lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    return [ln.split() for ln in lines[1:]]


def test_orbits_n4():
    code, out = run("orbits", "--n", "4")
    assert code == 0
    rows = table_rows(out)
    assert sorted(int(r[2]) for r in rows) == [81, 108, 162, 324, 648, 972]


def test_orbits_n5_and_n1():
    assert len(table_rows(run("orbits", "--n", "5")[1])) == 11
    rows = table_rows(run("orbits", "--n", "1")[1])
    assert len(rows) == 1 and rows[0][2] == "3"


@pytest.mark.parametrize("n", ["0", "7", "x"])
def test_orbits_bad_n(n):
    assert run("orbits", "--n", n)[0] == 2


def test_orbits_json_round_trip():
    code, out = run("orbits", "--n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate_document(doc)
    assert doc == census_document(4)
    assert [tuple(o) for o in doc["orbits"]] == [FIELDS] * 6
    assert json.dumps(doc, indent=2) + "\n" == out


def test_output_independent_of_threads():
    a = run("orbits", "--n", "4", "--threads", "1")[1]
    b = run("orbits", "--n", "4", "--threads", "8")[1]
    assert a == b == to_table(4)
    assert run("orbits", "--n", "4", "--threads", "0")[0] == 2


def test_deterministic_json():
    assert to_json(5) == to_json(5)


def test_dot_export(tmp_path):
    code, _ = run("orbits", "--n", "3", "--dot", str(tmp_path / "dot"))
    assert code == 0
    files = sorted(p.name for p in (tmp_path / "dot").iterdir())
    assert files == ["n3_orbit01.dot", "n3_orbit02.dot", "n3_orbit03.dot"]


def test_classify_k5():
    code, out = run("classify", "--n", "5", "--edges", "1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5,4-5")
    assert code == 0 and field(out, "label") == "O9"
    star = run("classify", "--n", "5", "--edges", "1-2,1-3,1-4,1-5")[1]
    assert field(star, "orbit_id") == field(out, "orbit_id")


def test_classify_point_and_generators():
    code, out = run("classify", "--n", "4", "--point", "[1:0:0:0:0:1:0:0:0:0:1:0:0:0:0:1]")
    assert code == 0 and field(out, "label") == "O17"
    code, out = run("classify", "--n", "5", "--generators", "ZXIII,XZIII,IIZII,IIIZI,IIIIZ")
    assert code == 0 and field(out, "label") == "O2"
    assert field(out, "witness (point -> canonical point)")


def test_classify_errors():
    assert run("classify", "--n", "3")[0] == 2
    assert run("classify", "--n", "3", "--edges", "1-2", "--point", "[1:0:0:0:0:0:0:0]")[0] == 2
    assert run("classify", "--n", "3", "--edges", "1-x")[0] == 2
    assert run("classify", "--n", "3", "--point", "[1:0:0]")[0] == 2
    assert run("classify", "--n", "3", "--point", "[1:1:1:1:1:1:1:0]")[0] == 3
    assert run("classify", "--n", "2", "--generators", "XI,ZI")[0] == 3
    assert run("classify", "--n", "2", "--generators", "XX,ZZ,ZI")[0] == 3
    assert run("classify", "--n", "2", "--generators", "XXX,ZZZ")[0] == 2


def test_map_path5_matches_table_row():
    code, out = run("map", "--n", "5", "--edges", "1-2,2-3,3-4,4-5")
    assert code == 0
    printed = "[1:0v:1_z6:0:0:0:1:0:0:1:0:1:0:...:0:1_z26:0:1:0:1:0]"
    point = field(out, "point (graded-lex)")
    values = point.strip("[]").split(":")
    for idx, v in parse_printed_point(printed, 5).items():
        assert int(values[idx]) == v
    assert field(out, "generators (minor-table)") == "ZXIII,XZXII,IXZXI,IIXZX,IIIXZ"


def test_map_small_cases():
    out = run("map", "--n", "4", "--edges", "")[1]
    assert field(out, "point (graded-lex)") == "[1" + ":0" * 15 + "]"
    out = run("map", "--n", "1", "--edges", "1-1")[1]
    assert field(out, "point (graded-lex)") == "[1:1]"
    out = run("map", "--n", "2", "--edges", "1-2", "--convention", "standard")[1]
    assert field(out, "generators (standard)") == "XZ,ZX"
    assert run("map", "--n", "2", "--edges", "1-3")[0] == 2


def test_verify_commands():
    code, out = run("verify", "--n", "4", "--paper-tables")
    assert code == 0 and out.strip().endswith("result: PASS") and "DISCREPANCY" not in out
    code, out = run("verify", "--n", "5", "--paper-tables")
    assert code == 0 and out.count("documented:") == 1 and "O10: z26" in out
    assert run("verify", "--n", "3")[0] == 2


def test_enumerate():
    code, out = run("enumerate", "--n", "2", "--points")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# n = 2: 15 Lagrangian subspaces" and len(lines) == 16


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "stabminors.cli", "verify", "--n", "3"], capture_output=True, text=True
    )
    assert out.returncode == 2
    out = subprocess.run([sys.executable, "-m", "stabminors.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "stabminors" in out.stdout


def test_table_text_header():
    assert to_table(2).splitlines()[0] == "# n = 2: orbits 2, points 15"
