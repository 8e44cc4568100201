import io
import json
import subprocess
import sys

import pytest

from cli_golden import CASES, golden_path, run_case
from protori.cli import main


def test_suite_size():
    assert len(CASES) >= 20


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    expected = golden_path(name).read_text(encoding="utf-8")
    assert run_case(CASES[name]) == expected
    assert run_case(CASES[name]) == expected  # stable across runs


@pytest.mark.parametrize("name", sorted(n for n, argv in CASES.items() if "json" in argv))
def test_json_output_is_valid(name):
    out = io.StringIO()
    assert main(CASES[name], stdout=out, stderr=io.StringIO()) == 0
    json.loads(out.getvalue())


def test_json_operand_round_trip():
    out = io.StringIO()
    main(["-o", "json", "normalize", "prod[2^inf, 3^1 ; rest = inf]"], stdout=out)
    again = io.StringIO()
    assert main(["-o", "json", "normalize", out.getvalue()], stdout=again) == 0
    assert again.getvalue() == out.getvalue()


def test_file_and_stdin_operands(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("prod[2^inf]\n")
    out = io.StringIO()
    assert main(["invariants", f"@{f}"], stdout=out) == 0
    assert out.getvalue() == "width=1 dim=1\n"
    out = io.StringIO()
    assert main(["dim", "-"], stdout=out, stdin=io.StringIO("protorus(torus=2)")) == 0
    assert out.getvalue() == "2\n"
    err = io.StringIO()
    assert main(["invariants", f"@{tmp_path / 'missing'}"], stdout=io.StringIO(), stderr=err) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "protori", "quotient", "--k", "4", "prod[2^inf]"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "prod[2^2]\n"


def test_selftest_passes():
    out = io.StringIO()
    assert main(["-o", "json", "selftest", "--seed", "11", "--rounds", "50"], stdout=out) == 0
    report = json.loads(out.getvalue())
    assert report["failures"] == [] and report["checks"] == 350
