import io as _io
import json
from pathlib import Path

import jsonschema
import pytest

from postlie.cli import report_schema, run

FIX = Path(__file__).parent / "fixtures"


def call(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


EXIT_MATRIX = [
    # good inputs
    (("check-algebra", FIX / "h3.json"), 0),
    (("check-algebra", "n4"), 0),
    (("check-algebra", FIX / "r3_lambda.json", "--param", "lambda=2"), 0),
    (("verify-embedding", FIX / "ex38_embedding.json"), 0),
    (("verify-embedding", FIX / "ex38_embedding_basis.json"), 0),
    (("induce", FIX / "ex38_embedding.json"), 0),
    (("verify-plas", FIX / "ex38_plas.json"), 0),
    (("complete", FIX / "ex38_plas.json"), 0),
    (("charpoly", FIX / "ex38_plas.json", "--map", "right"), 0),
    (("jordan", FIX / "jordan_matrix.json"), 0),
    (("catalog", "--row", "Ex5.2"), 0),
    (("catalog", "--list"), 0),
    # mathematical failures
    (("verify-embedding", FIX / "bad_morphism_embedding.json"), 1),
    (("check-algebra", FIX / "d4_printed.json"), 1),
    (("complete", FIX / "ex38_plas.json", "--criterion", "right"), 1),
    (("complete", FIX / "ex38_plas.json", "--criterion", "left"), 1),
    # malformed inputs and usage errors
    (("check-algebra", FIX / "malformed_schema.json"), 2),
    (("check-algebra", FIX / "malformed_poly.json"), 2),
    (("verify-embedding", FIX / "h3.json"), 2),
    (("check-algebra", FIX / "malformed_json.json"), 2),
    (("jordan", FIX / "symbolic_matrix.json"), 2),
    (("check-algebra", FIX / "missing.json"), 2),
    (("complete", FIX / "ex38_plas.json", "--criterion", "sideways"), 2),
    (("check-algebra", FIX / "h3.json", "--bogus"), 2),
    (("catalog", "--row", "no-such-row"), 2),
    (("induce", FIX / "h3.json"), 2),
]


@pytest.mark.parametrize("argv,code", EXIT_MATRIX, ids=lambda v: " ".join(map(str, v)) if isinstance(v, tuple)
                         else str(v))
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code, out + err
    if code == 2:
        assert err.strip()


@pytest.mark.parametrize("argv,code", [c for c in EXIT_MATRIX if c[1] != 2],
                         ids=lambda v: " ".join(map(str, v)) if isinstance(v, tuple) else str(v))
def test_json_validates_and_agrees_with_text(argv, code):
    _, out_json, _ = call(*argv, "--format", "json")
    doc = json.loads(out_json)
    jsonschema.validate(doc, report_schema())
    assert doc["ok"] == (code == 0)
    if argv[0] != "induce":
        _, out_text, _ = call(*argv)
        verdict = out_text.strip().splitlines()[-1]
        assert verdict == f"verdict: {'pass' if doc['ok'] else 'fail'}"


def test_complete_reports_shifted_criterion():
    code, out, _ = call("complete", FIX / "ex38_plas.json", "--criterion", "right-shifted")
    assert code == 0
    assert "R − ½ad nilpotent: true" in out
    assert "{1/2}" in out and "{-1/2}" in out


def test_unit_shift_determinant():
    code, out, _ = call("complete", FIX / "ex38_plas.json", "--criterion", "unit-shift-det", "--format", "json")
    assert code == 0
    assert json.loads(out)["details"]["det(I + R - 1/2 ad)"] == "1"


@pytest.mark.parametrize("which,expected", [
    ("left", "lambda^3 + lambda*x3^2"),
    ("right", "lambda^3 - 1/2*lambda*y1^2 - 1/2*lambda*y2^2"),
    ("shifted", "lambda^3"),
])
def test_charpoly(which, expected):
    code, out, _ = call("charpoly", FIX / "ex38_plas.json", "--map", which)
    assert code == 0
    assert expected in out


def test_induce_round_trip(tmp_path):
    target = tmp_path / "plas.json"
    code, out, _ = call("induce", FIX / "ex38_embedding.json", "-o", target)
    assert code == 0 and "verdict: pass" in out
    assert call("verify-plas", target)[0] == 0
    assert call("complete", target)[0] == 0


def test_induce_prints_plas_document():
    code, out, _ = call("induce", FIX / "ex38_embedding.json")
    assert code == 0
    doc = json.loads(out)
    assert doc["h"] and doc["g"]


def test_output_flag_writes_report(tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = call("verify-plas", FIX / "ex38_plas.json", "--format", "json", "-o", target)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ok"] is True


def test_error_location_is_reported():
    code, _, err = call("check-algebra", FIX / "malformed_poly.json")
    assert code == 2
    assert "brackets/0/value/0/coeff" in err and "position 3" in err


def test_catalog_row_report():
    code, out, _ = call("catalog", "--row", "Ex5.2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    text = json.dumps(doc)
    assert "Ex5.2" in text and "lambda^4 - 1/8*lambda*y1^2*y2" in text


def test_deterministic_output():
    a = call("catalog", "--row", "T2.h4", "--format", "json")[1]
    b = call("catalog", "--row", "T2.h4", "--format", "json")[1]
    assert a == b
