import json
import subprocess
import sys

import pytest

from lorenzknots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_braid(capsys):
    assert run(capsys, "braid", "2,1,1")[:2] == (0, "s4 s3 s5 s2 s4 s6 s1 s3 s5 s2\n")
    code, out, _ = run(capsys, "braid", "2,1,1", "--format", "json")
    assert json.loads(out)["strands"] == 7


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "4,4,2")
    assert code == 0 and out.startswith("g=5 b=3 bound=[0.01, 100]")


def test_monodromy_formats(capsys):
    code, out, _ = run(capsys, "monodromy", "3,2,1", "--surface", "mixed", "--inverse", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 6
    code, out, _ = run(capsys, "monodromy", "3,2,1", "--format", "csv")
    assert out.startswith("basis,")


def test_alexander_methods(capsys):
    for method in ("charpoly", "burau", "both"):
        assert run(capsys, "alexander", "2,1,1", "--method", method)[:2] == (0, "1,-1,1,-1,1\n")


def test_roots_files(capsys, tmp_path):
    csv_path, svg_path = tmp_path / "r.csv", tmp_path / "r.svg"
    code, out, _ = run(capsys, "roots", "4,4,2", "--csv", str(csv_path), "--svg", str(svg_path))
    assert code == 0
    assert csv_path.read_text() == out
    assert len(out.splitlines()) == 11
    assert svg_path.read_text().startswith("<svg")


def test_screen_exit_codes(capsys):
    code, out, _ = run(capsys, "screen", "--genus", "1", "--braid-index", "2", "--max-modulus", "8")
    assert code == 3 and out.startswith("excluded r=3 ")
    code, out, _ = run(capsys, "screen", "--genus", "5", "--braid-index", "3", "--alexander", "1,-1,0,1,-1,1,-1,1,0,-1,1")
    assert code == 0 and out.startswith("not-excluded")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "4,4,2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "2", "--published", "--format", "json")
    assert code == 0
    assert any(not c["pass"] for c in json.loads(out))


def test_census_and_sample(capsys, tmp_path):
    path = tmp_path / "c.csv"
    assert run(capsys, "census", "--max-cells", "6", "--knots-only", "--out", str(path))[0] == 0
    assert path.read_text().splitlines()[1].startswith("heights,")
    a = run(capsys, "sample", "--cells", "20", "--seed", "4", "--count", "3")
    b = run(capsys, "sample", "--cells", "20", "--seed", "4", "--count", "3")
    assert a == b and len(a[1].splitlines()) == 3


def test_burau_spectrum_is_byte_identical(capsys):
    argv = ["burau-spectrum", "--strands", "3", "--length", "30", "--count", "3", "--seed", "7", "--positive"]
    a = run(capsys, *argv)
    b = run(capsys, *argv, "--jobs", "2")
    assert a[0] == 0 and a[1] == b[1]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["screen", "--genus", "1"])
    assert exc.value.code == 1
    assert run(capsys, "braid", "x,y")[0] == 1
    assert run(capsys, "screen", "--genus", "1", "--braid-index", "2", "--alexander", "1,q")[0] == 1


def test_computation_errors(capsys):
    code, _, err = run(capsys, "alexander", "2,1")
    assert code == 2 and "link" in err
    assert run(capsys, "screen", "--genus", "0", "--braid-index", "2", "--max-modulus", "2")[0] == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "lorenzknots", "braid", "1"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "s2 s1 s3 s2\n"
