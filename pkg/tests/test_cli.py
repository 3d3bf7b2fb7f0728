import io
import subprocess
import sys

import pytest

from gammarough.cli import run_cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_validate_singleton(fixture_dir):
    code, out, _ = run("validate", str(fixture_dir / "singleton.grs"))
    assert code == 0
    assert "valid=true" in out.splitlines()


def test_validate_unchecked_example2_reports_findings(fixture_dir):
    code, out, _ = run("--format", "machine", "validate", str(fixture_dir / "example2_unchecked.grs"))
    assert code == 1
    assert any(line.startswith("witness=(") for line in out.splitlines())


def test_approx_example1(fixture_dir):
    code, out, _ = run("--format", "machine", "approx", str(fixture_dir / "example1.grs"), "--map", "T", "--set", "{a}")
    assert code == 0
    lines = out.splitlines()
    assert "upper={2,4}" in lines and "lower={}" in lines


def test_text_format_has_header_and_footer(fixture_dir):
    code, out, _ = run("approx", str(fixture_dir / "example1.grs"), "--map", "T", "--set", "{a}")
    lines = out.splitlines()
    assert lines[0] == "# gammarough approx" and lines[-1] == "# result: ok"


def test_per_command_format_flag(fixture_dir):
    _, out, _ = run("validate", str(fixture_dir / "singleton.grs"), "--format", "machine")
    assert not out.startswith("#")


def test_pawlak(fixture_dir):
    code, out, _ = run(
        "--format", "machine", "approx", str(fixture_dir / "example3.grs"),
        "--pawlak", "--partition", "{a},{b,c}", "--carrier", "M", "--set", "{b}",
    )
    assert code == 0
    assert "lower={}" in out.splitlines() and "upper={b,c}" in out.splitlines()


def test_classify_and_antihom(fixture_dir):
    f = str(fixture_dir / "example3.grs")
    code, out, _ = run("--format", "machine", "classify", f, "--structure", "M", "--set", "{b}")
    assert code == 0 and "TwoSidedIdeal=true" in out.splitlines()
    code, out, _ = run("--format", "machine", "antihom", f, "--map", "T")
    assert code == 0 and "level=plain" in out.splitlines()
    code, _, _ = run("antihom", f, "--map", "T", "--require", "strong")
    assert code == 1


def test_enumerate_and_quotient(fixture_dir):
    f = str(fixture_dir / "example3.grs")
    code, out, _ = run("--format", "machine", "enumerate", f, "--from", "M", "--to", "M", "--filter", "strong", "--limit", "2")
    assert code == 0 and "matched=15" in out.splitlines()
    code, out, _ = run("--format", "machine", "quotient", f, "--map", "T")
    assert code == 0 and "well_defined=true" in out.splitlines()


def test_audit_exit_codes(fixture_dir):
    f = str(fixture_dir / "example3.grs")
    assert run("audit", f, "--map", "T", "--theorem", "T5.1.i")[0] == 0
    assert run("audit", f, "--map", "T", "--theorem", "T5.1.ii")[0] == 1
    code, _, err = run("audit", f, "--map", "T", "--budget", "5")
    assert code == 2 and "budget" in err


def test_search():
    code, out, _ = run("--format", "machine", "search", "--theorem", "T5.1.ii")
    assert code == 1 and "found=true" in out.splitlines()


def test_errors_exit_2(fixture_dir, tmp_path):
    bad = tmp_path / "bad.grs"
    bad.write_text("format grs1\nuniverse U\nelements: a a\n")
    code, _, err = run("validate", str(bad))
    assert code == 2 and "line 3" in err
    assert run("validate", str(tmp_path / "missing.grs"))[0] == 2
    assert run("approx", str(fixture_dir / "example1.grs"), "--map", "Nope", "--set", "{a}")[0] == 2
    assert run("frobnicate")[0] == 2


def test_serialize_prints_canonical_text(fixture_dir):
    path = fixture_dir / "example6_unchecked.grs"
    code, out, _ = run("serialize", str(path))
    assert code == 0
    assert "y -> {b, c}" in out


@pytest.mark.parametrize("argv", [
    ["audit", "example4.grs", "--map", "T", "--samples", "50", "--seed", "7"],
    ["enumerate", "example3.grs", "--from", "M", "--to", "M", "--budget", "40", "--seed", "2"],
    ["audit-paper"],
])
def test_machine_output_stable(fixture_dir, argv):
    argv = [str(fixture_dir / a) if a.endswith(".grs") else a for a in argv]
    first = run("--format", "machine", *argv)
    second = run("--format", "machine", *argv)
    assert first == second


def test_console_entry_point(fixture_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "gammarough.cli", "validate", str(fixture_dir / "singleton.grs")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "valid=true" in proc.stdout
