"""End-to-end tests of the zernike-bases CLI via subprocess.

Requires ZB_CLI (path to the binary) and ZB_SCHEMAS (docs/schemas directory),
both set by the ctest registration.
"""

import json
import math
import os
import pathlib
import subprocess

import pytest

CLI = os.environ["ZB_CLI"]
SCHEMA_DIR = pathlib.Path(os.environ["ZB_SCHEMAS"])


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, f"{args}: rc={proc.returncode}\n{proc.stderr}"
    return proc


def validate(instance, schema_name):
    jsonschema = pytest.importorskip("jsonschema")
    from referencing import Registry, Resource

    registry = Registry()
    for path in SCHEMA_DIR.glob("*.schema.json"):
        resource = Resource.from_contents(json.loads(path.read_text()))
        registry = registry.with_resource(uri=path.name, resource=resource)
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=registry).validate(instance)


def test_tables_json_structure():
    doc = json.loads(run("tables", "--n-max", "4").stdout)
    validate(doc, "tables.schema.json")
    assert doc["n_max"] == 4
    assert len(doc["matrices"]) == 5
    w0 = doc["matrices"][0]["rows"][0][0]
    assert (w0["phase_k"], w0["sign"], w0["radicand_num"], w0["radicand_den"]) == (0, 1, "1", "1")
    for block in doc["matrices"]:
        n = block["n"]
        assert len(block["rows"]) == n + 1
        for row, entries in enumerate(block["rows"]):
            assert len(entries) == n + 1
            for col, e in enumerate(entries):
                n1, m = n - row, n - 2 * col
                structural_zero = n % 2 == 0 and m == 0 and n1 % 2 == 1
                assert (e["sign"] == 0) == structural_zero, (n, n1, m)


def test_tables_csv_matches_json():
    doc = json.loads(run("tables", "--n-max", "3").stdout)
    lines = run("tables", "--n-max", "3", "--format", "csv").stdout.splitlines()
    assert lines[0] == "n,n1,n2,m,phase_k,sign,radicand_num,radicand_den,re,im"
    assert len(lines) == 1 + sum((n + 1) ** 2 for n in range(4))
    by_key = {}
    for line in lines[1:]:
        n, n1, n2, m, phase_k, sign, num, den, re, im = line.split(",")
        by_key[(int(n), int(n1), int(m))] = (int(phase_k), int(sign), num, den)
    for block in doc["matrices"]:
        n = block["n"]
        for row, entries in enumerate(block["rows"]):
            for col, e in enumerate(entries):
                key = (n, n - row, n - 2 * col)
                assert by_key[key] == (e["phase_k"], e["sign"], e["radicand_num"], e["radicand_den"])


def test_tables_deterministic():
    a = run("tables", "--n-max", "6").stdout
    b = run("tables", "--n-max", "6").stdout
    assert a == b


def test_eval_grid_json(tmp_path):
    out = tmp_path / "grid.json"
    run("eval", "--basis", "I", "--index", "1,1", "--grid", "5", "--output", str(out))
    doc = json.loads(out.read_text())
    validate(doc, "grid.schema.json")
    assert doc["nx"] == 5 and doc["ny"] == 5
    assert len(doc["values"]) == 25 and len(doc["mask"]) == 25
    center = doc["values"][2 * 5 + 2]
    assert center == [0, 0]  # r = 0 zeroes the |m| = 1 radial factor
    assert doc["mask"][0] is False and doc["mask"][2] is True  # corner out, edge midpoint in
    # phase: at (x, y) = (0.5, 0) the function is real positive; at (0, 0.5) imaginary
    right = doc["values"][2 * 5 + 3]
    top = doc["values"][3 * 5 + 2]
    assert right[0] > 0 and abs(right[1]) < 1e-15
    assert abs(top[0]) < 1e-15 and top[1] > 0
    assert math.isclose(right[0], top[1], rel_tol=1e-12)


def test_eval_csv_row_count():
    lines = run("eval", "--basis", "II", "--index", "0,2", "--grid", "7x5", "--format", "csv").stdout.splitlines()
    assert lines[0] == "x,y,re,im,in_disk"
    assert len(lines) == 1 + 7 * 5


def test_convert_delta(tmp_path):
    spec = {"basis": "II", "max_rung": 1, "coeffs": [{"n1": 0, "n2": 1, "re": 1.0}]}
    src = tmp_path / "in.json"
    src.write_text(json.dumps(spec))
    doc = json.loads(run("convert", "--input", str(src), "--target", "I").stdout)
    validate(doc, "spectrum.schema.json")
    assert doc["basis"] == "I"
    got = {(c["n"], c["m"]): complex(c["re"], c.get("im", 0.0)) for c in doc["coeffs"]}
    inv_sqrt2 = 1 / math.sqrt(2)
    assert math.isclose(got[(1, 1)].real, inv_sqrt2, rel_tol=1e-12)
    assert math.isclose(got[(1, -1)].real, inv_sqrt2, rel_tol=1e-12)
    assert abs(got[(1, 1)].imag) < 1e-15 and abs(got[(1, -1)].imag) < 1e-15


def test_convert_round_trip(tmp_path):
    spec = {
        "basis": "I",
        "max_rung": 2,
        "coeffs": [
            {"n": 0, "m": 0, "re": 0.25},
            {"n": 2, "m": 2, "re": 0.5, "im": -0.125},
            {"n": 2, "m": -2, "re": 0.5, "im": 0.125},
            {"n": 2, "m": 0, "re": -1.5},
        ],
    }
    src = tmp_path / "a.json"
    mid = tmp_path / "b.json"
    src.write_text(json.dumps(spec))
    run("convert", "--input", str(src), "--target", "II", "--output", str(mid))
    doc = json.loads(run("convert", "--input", str(mid), "--target", "I").stdout)
    got = {(c["n"], c["m"]): complex(c["re"], c.get("im", 0.0)) for c in doc["coeffs"]}
    for c in spec["coeffs"]:
        want = complex(c["re"], c.get("im", 0.0))
        assert abs(got[(c["n"], c["m"])] - want) < 1e-14


def test_fit_from_eval_samples(tmp_path):
    grid_csv = run("eval", "--basis", "I", "--index", "2,0", "--grid", "9", "--format", "csv").stdout
    samples = tmp_path / "samples.csv"
    rows = ["x,y,re,im"]
    for line in grid_csv.splitlines()[1:]:
        x, y, re, im, in_disk = line.split(",")
        if in_disk == "1":
            rows.append(f"{x},{y},{re},{im}")
    samples.write_text("\n".join(rows) + "\n")
    doc = json.loads(run("fit", "--input", str(samples), "--basis", "I", "--n-max", "2").stdout)
    validate(doc, "fit_report.schema.json")
    assert doc["rms_residual"] < 1e-12
    assert doc["rank"] == doc["basis_count"] == 6
    got = {(c["n"], c["m"]): complex(c["re"], c.get("im", 0.0)) for c in doc["spectrum"]["coeffs"]}
    assert abs(got[(2, 0)] - 1) < 1e-12
    for key, value in got.items():
        if key != (2, 0):
            assert abs(value) < 1e-12


def test_verify_pass_and_report():
    proc = run("verify", "--suite", "unitarity", "--n-max", "8")
    doc = json.loads(proc.stdout)
    validate(doc, "verify_report.schema.json")
    assert doc["pass"] is True
    assert doc["reports"][0]["exact"] is True


def test_verify_all_suites():
    doc = json.loads(run("verify", "--suite", "all", "--n-max", "3", "--order", "32").stdout)
    validate(doc, "verify_report.schema.json")
    assert doc["pass"] is True
    assert sorted(r["suite"] for r in doc["reports"]) == sorted(
        ["orthonormality", "unitarity", "eigenvalue", "overlap", "fourier", "symmetry"]
    )


def test_verify_unreachable_tolerance_exits_1():
    proc = run("verify", "--suite", "overlap", "--n-max", "2", "--order", "48",
               "--tolerance", "1e-30", expect=1)
    doc = json.loads(proc.stdout)
    assert doc["pass"] is False


def test_invalid_index_is_reported():
    proc = run("eval", "--basis", "I", "--index", "1,2", expect=2)
    assert "error:" in proc.stderr


def test_missing_input_file_is_reported(tmp_path):
    proc = run("convert", "--input", str(tmp_path / "nope.json"), "--target", "I", expect=2)
    assert "error:" in proc.stderr
