import io
import json
import shutil
import subprocess
import sys

import pytest

from lrckit.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_then_verify(tmp_path, capsys):
    out_file = tmp_path / "code.json"
    rc, _, _ = _run(capsys, "construct", "sunflower", "--q", "4", "--delta", "3",
                    "--out", str(out_file))
    assert rc == 0
    doc = json.loads(out_file.read_text())
    assert doc["format_version"] == 1
    assert doc["n"] == 20 and doc["k_claimed"] == 7
    assert doc["field"] == {"p": 2, "m": 2, "modulus": [1, 1, 1]}
    rc, out, _ = _run(capsys, "verify", "--in", str(out_file))
    assert rc == 0
    cert = json.loads(out)
    assert cert["optimal"] and cert["d"] == 8 and cert["ell"] == 5
    assert "stage_times_ms" in cert


def test_pipe_fidelity_via_stdin(tmp_path, capsys, monkeypatch):
    rc, out, _ = _run(capsys, "construct", "sunflower", "--q", "3", "--delta", "2")
    assert rc == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    rc, out2, _ = _run(capsys, "verify", "--no-timing")
    assert rc == 0
    cert = json.loads(out2)
    assert (cert["n"], cert["k"], cert["d"]) == (12, 5, 6)
    assert "stage_times_ms" not in cert


def test_verify_determinism(tmp_path, capsys):
    out_file = tmp_path / "code.json"
    _run(capsys, "construct", "sunflower", "--q", "4", "--delta", "2",
         "--out", str(out_file))
    rc1, out1, _ = _run(capsys, "verify", "--in", str(out_file), "--no-timing")
    rc2, out2, _ = _run(capsys, "verify", "--in", str(out_file), "--no-timing")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_construct_determinism(capsys):
    rc1, out1, _ = _run(capsys, "construct", "sunflower", "--q", "5", "--delta", "2")
    rc2, out2, _ = _run(capsys, "construct", "sunflower", "--q", "5", "--delta", "2")
    assert rc1 == rc2 == 0 and out1 == out2


def test_verify_corrupted_entry(tmp_path, capsys):
    out_file = tmp_path / "code.json"
    _run(capsys, "construct", "sunflower", "--q", "4", "--delta", "3",
         "--out", str(out_file))
    doc = json.loads(out_file.read_text())
    doc["H"][11][2] = (doc["H"][11][2] + 1) % 4  # corrupt a global parity entry
    out_file.write_text(json.dumps(doc))
    rc, out, _ = _run(capsys, "verify", "--in", str(out_file))
    assert rc == 1
    cert = json.loads(out)
    assert not cert["optimal"]
    assert cert["failed_stage"] in ("locality", "distance")


def test_verify_structure_failure(tmp_path, capsys):
    out_file = tmp_path / "code.json"
    _run(capsys, "construct", "sunflower", "--q", "4", "--delta", "3",
         "--out", str(out_file))
    doc = json.loads(out_file.read_text())
    doc["delta"] = 2  # group width 3 does not divide n = 20
    out_file.write_text(json.dumps(doc))
    rc, out, _ = _run(capsys, "verify", "--in", str(out_file))
    assert rc == 1
    assert json.loads(out)["failed_stage"] == "structure"


def test_verify_rejects_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": 99}')
    rc, _, err = _run(capsys, "verify", "--in", str(bad))
    assert rc == 2 and "format_version" in err
    bad.write_text("not json at all")
    rc, _, _ = _run(capsys, "verify", "--in", str(bad))
    assert rc == 2
    rc, _, _ = _run(capsys, "verify", "--in", str(tmp_path / "missing.json"))
    assert rc == 2


def test_verify_budget_too_small(tmp_path, capsys):
    out_file = tmp_path / "code.json"
    _run(capsys, "construct", "sunflower", "--q", "4", "--delta", "3",
         "--out", str(out_file))
    rc, _, err = _run(capsys, "verify", "--in", str(out_file), "--budget", "10")
    assert rc == 2 and "budget" in err.lower()


def test_usage_errors(capsys):
    assert _run(capsys, "bounds")[0] == 2                      # missing args
    assert _run(capsys, "no-such-command")[0] == 2
    assert _run(capsys, "geometry", "search", "--q", "4")[0] == 2  # no --delta


def test_bounds_single_row(capsys):
    rc, out, _ = _run(capsys, "bounds", "--q", "4", "--r", "2",
                      "--delta", "3", "--d", "8")
    assert rc == 0
    header, row = out.strip().split("\n")
    cells = dict(zip(header.split("\t"), row.split("\t")))
    assert cells["subspace_count"] == "20"
    assert cells["vector_count"] == "40"
    assert cells["incidence"] == "20"
    assert cells["johnson_a"] == "-"
    assert cells["best"] == "20"


def test_bounds_grid_and_table(capsys):
    rc, out, err = _run(capsys, "bounds", "--q", "4,5", "--r", "2",
                        "--delta", "2,3", "--d", "5,6,8", "--grid")
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) > 3
    rc, out, _ = _run(capsys, "bounds", "--q", "5", "--r", "2",
                      "--delta", "2", "--d", "6", "--format", "table")
    assert rc == 0 and "best" in out
    # comma lists without --grid are a usage error
    assert _run(capsys, "bounds", "--q", "4,5", "--r", "2",
                "--delta", "2", "--d", "6")[0] == 2


def test_geometry_enumerate(capsys):
    rc, out, _ = _run(capsys, "geometry", "enumerate", "--q", "4")
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["points"]) == 21 and len(doc["lines"]) == 21


def test_geometry_sunflower_and_incidence(capsys):
    rc, out, _ = _run(capsys, "geometry", "sunflower", "--q", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["size"] == 5 and doc["t"] == [1] * 5
    rc, out, _ = _run(capsys, "geometry", "sunflower", "--q", "2", "--incidence")
    assert rc == 0
    rows = out.strip().split("\n")
    assert len(rows) == 3 and all(len(r) == 7 for r in rows)
    assert all(r.count("1") == 3 for r in rows)


def test_geometry_search_feeds_construct(tmp_path, capsys):
    rc, out, _ = _run(capsys, "geometry", "search", "--q", "4", "--delta", "3")
    assert rc == 0
    fam_file = tmp_path / "family.json"
    fam_file.write_text(out)
    rc, out, _ = _run(capsys, "construct", "from-lines", "--lines", str(fam_file),
                      "--delta", "3")
    assert rc == 0
    code_doc = json.loads(out)
    fam_doc = json.loads(fam_file.read_text())
    assert code_doc["n"] == (3 + 1) * fam_doc["size"]


def test_from_lines_condition_violation(tmp_path, capsys):
    fam = {"field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},
           "lines": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
    fam_file = tmp_path / "triangle.json"
    fam_file.write_text(json.dumps(fam))
    rc, _, err = _run(capsys, "construct", "from-lines", "--lines", str(fam_file),
                      "--delta", "3")
    assert rc == 1
    assert "free points" in err or "intersection" in err


def test_search_limit_reports_best(capsys):
    rc, out, err = _run(capsys, "geometry", "search", "--q", "4", "--delta", "3",
                        "--limit", "3")
    assert rc == 1
    assert "best-found" in err
    doc = json.loads(out)
    assert doc["lines"]


def test_help_exits_zero(capsys):
    assert _run(capsys, "--help")[0] == 0


def test_real_process_pipe():
    construct = subprocess.run(
        [sys.executable, "-m", "lrckit.cli", "construct", "sunflower",
         "--q", "3", "--delta", "2"],
        capture_output=True, text=True)
    assert construct.returncode == 0
    verify = subprocess.run(
        [sys.executable, "-m", "lrckit.cli", "verify", "--no-timing"],
        input=construct.stdout, capture_output=True, text=True)
    assert verify.returncode == 0
    cert = json.loads(verify.stdout)
    assert (cert["n"], cert["k"], cert["d"]) == (12, 5, 6)


@pytest.mark.skipif(shutil.which("lrckit") is None,
                    reason="console script not on PATH")
def test_console_script_entry_point():
    result = subprocess.run(["lrckit", "bounds", "--q", "4", "--r", "2",
                             "--delta", "3", "--d", "8"],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.splitlines()[1].split("\t")[5] == "20"
