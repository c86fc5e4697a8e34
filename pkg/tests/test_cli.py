from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from phantomcodes.cli import run
from phantomcodes.css import css_from_dict, hypercube_code, same_code


def test_verify_pg832_json(capsys):
    assert run(["verify", "pg832", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    checks = data[0]["checks"]
    assert len(checks) >= 12
    assert all(c["status"] == "pass" for c in checks)
    assert {"id", "description", "status", "witness"} <= set(checks[0])


def test_verify_hypercube_text(capsys):
    assert run(["--seed", "3", "verify", "hypercube", "3"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "hypercube 3" in out


@pytest.mark.parametrize("target", ["tables", "classify", "nogo"])
def test_verify_suites(target, capsys):
    assert run(["verify", target]) == 0
    assert "checks passed" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [[], ["verify"], ["verify", "hypercube"], ["verify", "hypercube", "1"], ["verify", "pg832", "3"],
     ["emit-code", "pg832", "4"], ["bogus"], ["distance", "hypercube", "x"]],
)
def test_bad_usage_exits_2(argv, capsys):
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_emit_hypercube_json_roundtrip(capsys):
    assert run(["emit-code", "hypercube", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert same_code(css_from_dict(data), hypercube_code(4))
    assert data["certificate_summary"]["image_order"] == 20160


def test_emit_hypercube_csv(capsys):
    assert run(["emit-code", "hypercube", "3", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert sum(r["kind"] == "stabilizer_z" for r in rows) == 3


def test_emit_pg832_json(capsys):
    assert run(["emit-code", "pg832"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["K"] == 16 and len(data["codewords"]) == 16


def test_tables_csv(capsys):
    assert run(["tables", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("line,points,b,word,dual")


def test_distance(capsys):
    assert run(["distance", "hypercube", "4"]) == 0
    assert capsys.readouterr().out.strip() == "d_x=2 d_z=7 d=2"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "phantomcodes", "distance", "hypercube", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "d_x=2 d_z=3 d=2"
