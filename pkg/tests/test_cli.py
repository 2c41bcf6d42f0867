import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from lie5.catalog import emit, list_geometries
from lie5.cli import EXIT_INVALID, EXIT_NOT_IN_CATALOG, EXIT_OK, EXIT_USAGE, main, parse_poly
from lie5.jsonio import algebra_to_json, matrix_to_json
from lie5.liealg import abelian, r2_standard
from lie5.qlinalg import Poly

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write(path, text):
    Path(path).write_text(text, encoding="utf-8")
    return str(path)


# -- identify ---------------------------------------------------------------------


def test_identify_nil4e(workdir):
    write("nil4e.json", algebra_to_json(emit("Nil4×E")))
    code, out, _ = run("identify", "nil4e.json")
    assert code == EXIT_OK
    assert "Nil4×E" in out and "A_{4,1} ⊕ ℝ" in out


def test_identify_json_report_golden(workdir):
    write("nil4e.json", algebra_to_json(emit("Nil4×E")))
    code, out, _ = run("identify", "nil4e.json", "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert set(report) == {"command", "input_digest", "results", "exit_status"}
    assert report == json.loads((GOLDEN / "identify_nil4e.json").read_text(encoding="utf-8"))


def test_identify_jacobi_failure(workdir):
    bad = {
        "name": "bad", "dim": 3, "basis": ["e1", "e2", "e3"],
        "brackets": [
            {"i": 3, "j": 2, "terms": [{"k": 1, "c": "1"}]},
            {"i": 3, "j": 1, "terms": [{"k": 2, "c": "1"}]},
            {"i": 2, "j": 1, "terms": [{"k": 1, "c": "1"}]},
        ],
    }
    write("bad.json", json.dumps(bad))
    code, _, err = run("identify", "bad.json")
    assert code == EXIT_INVALID
    assert "(1, 2, 3)" in err
    code, out, _ = run("identify", "bad.json", "--json")
    assert json.loads(out)["results"]["witness"] == [1, 2, 3]


def test_identify_abelian(workdir):
    write("r5.json", algebra_to_json(abelian(5)))
    code, out, _ = run("identify", "r5.json")
    assert code == EXIT_NOT_IN_CATALOG and "AbelianInput" in out


def test_identify_syntax_error(workdir):
    write("broken.json", '{"name": "x",\n "dim": ]')
    code, out, _ = run("identify", "broken.json", "--json")
    assert code == EXIT_INVALID
    res = json.loads(out)["results"]
    assert res["error"] == "FormatError" and (res["line"], res["col"]) == (2, 9)


def test_identify_missing_file(workdir):
    assert run("identify", "nope.json")[0] == EXIT_INVALID


def test_emit_identify_round_trip(workdir):
    for rec in list_geometries():
        code, _, _ = run("catalog", "emit", rec.name, "--output", "g.json")
        assert code == EXIT_OK
        code, out, _ = run("identify", "g.json", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["results"]["name"] == rec.name


# -- verify-paper --------------------------------------------------------------------


def test_verify_only_h2():
    code, out, _ = run("verify-paper", "--only", "h2", "--json")
    assert code == EXIT_OK
    checks = json.loads(out)["results"]["checks"]
    assert [c["id"] for c in checks] == [f"h2.phi{k}" for k in range(1, 7)]
    assert all(c["passed"] for c in checks)


def test_verify_only_list_forms():
    code, out, _ = run("verify-paper", "--only", "h2.phi1,dd", "--only", "lattice.exp6J4")
    assert code == EXIT_OK
    assert out.strip().endswith("3/3 checks passed")


def test_verify_unknown_check():
    assert run("verify-paper", "--only", "nonsense")[0] == EXIT_USAGE


def test_verify_output_deterministic():
    a = run("verify-paper", "--only", "lattice,dirichlet", "--json")
    b = run("verify-paper", "--only", "lattice,dirichlet", "--json")
    assert a == b and a[0] == EXIT_OK


# -- catalog ------------------------------------------------------------------------


def test_catalog_list():
    code, out, _ = run("catalog", "list", "--json")
    assert code == EXIT_OK and len(json.loads(out)["results"]["geometries"]) == 10


def test_catalog_emit_phi6():
    code, out, _ = run("catalog", "emit", "R3⋊{xyz=1}^0")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["basis"] == ["x1", "x2", "x3", "z1", "z2"]
    assert {(b["i"], b["j"]) for b in data["brackets"]} == {(4, 1), (4, 3), (5, 2), (5, 3)}


def test_catalog_emit_params():
    code, out, _ = run("catalog", "emit", "R4⋊R[diag]", "--param", "a=1", "b=2", "c=3")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["params"] == {"a": "1", "b": "2", "c": "3"}
    code, _, _ = run("catalog", "emit", "R4⋊R[diag]", "--param", "a=1", "b=1", "c=3")
    assert code == EXIT_INVALID


def test_catalog_emit_errors():
    assert run("catalog", "emit", "Nil7")[0] == EXIT_NOT_IN_CATALOG
    assert run("catalog", "emit")[0] == EXIT_USAGE
    assert run("catalog", "emit", "R4⋊R[diag]", "--param", "a")[0] == EXIT_USAGE


def test_catalog_export_matches_golden():
    code, out, _ = run("catalog", "export")
    assert code == EXIT_OK
    assert json.loads(out) == json.loads((GOLDEN / "catalog.json").read_text(encoding="utf-8"))


# -- lattice ---------------------------------------------------------------------------


def test_check_poly():
    code, out, _ = run("lattice", "check-poly", "-10", "23", "-10")
    assert code == EXIT_OK and "admissible" in out and "not" not in out
    code, out, _ = run("lattice", "check-poly", "-4", "6", "-4", "--json")
    assert code == EXIT_OK and json.loads(out)["results"]["admissible"] is False
    assert run("lattice", "check-poly", "1", "x", "2")[0] == EXIT_INVALID


def test_dirichlet():
    code, out, _ = run("lattice", "dirichlet", "x^3 - 3x + 1", "x", "1 - x", "--json")
    assert code == EXIT_OK
    res = json.loads(out)["results"]
    assert res["unit_matrices"][0] == [["0", "0", "-1"], ["1", "0", "3"], ["0", "1", "0"]]
    assert res["kind"] == "Z3_by_Z2"
    assert run("lattice", "dirichlet", "x^3 - 3x + 1", "x", "x")[0] == EXIT_INVALID
    assert run("lattice", "dirichlet", "x^3 - 3x + 1", "2x", "x")[0] == EXIT_INVALID


def test_approx_rendering():
    code, out, _ = run("--approx", "3", "lattice", "dirichlet", "x^3 - 3x + 1", "x", "1 - x", "--json")
    assert code == EXIT_OK
    logs = json.loads(out)["results"]["log_embeddings"][0]
    assert logs[0] == ["0.631", "0.631"]


def test_precision_env(monkeypatch):
    monkeypatch.setenv("LIE5_PRECISION", "1/64")
    code, out, _ = run("lattice", "dirichlet", "x^3 - 3x + 1", "x", "1 - x", "--json")
    assert code == EXIT_OK
    for lo, hi in json.loads(out)["results"]["log_embeddings"][0]:
        assert Fraction(hi) - Fraction(lo) <= Fraction(1, 64)


def test_parse_poly():
    assert parse_poly("x^3 - 3x + 1") == Poly([1, -3, 0, 1])
    assert parse_poly("1-a") == Poly([1, -1])
    assert parse_poly("-x^2 + 1/2") == Poly([Fraction(1, 2), 0, -1])


# -- cohomology and derivations ----------------------------------------------------------


def test_cohomology_phi3(workdir):
    write("r2.json", algebra_to_json(abelian(2)))
    m1, m2 = r2_standard(3)
    write("phi3.json", json.dumps({"module_dim": 3, "matrices": [matrix_to_json(m1), matrix_to_json(m2)]}))
    code, out, _ = run("cohomology", "r2.json", "--rep", "phi3.json", "--degree", "2")
    assert code == EXIT_OK and out.strip() == "dim H^2 = 2"
    assert run("cohomology", "r2.json", "--rep", "phi3.json", "--degree", "5")[0] == EXIT_INVALID
    assert run("cohomology", "r2.json", "--rep", "phi3.json")[0] == EXIT_USAGE


def test_derivations_n3(workdir):
    from lie5.liealg import LieAlgebra

    n3 = LieAlgebra.from_brackets("n3", ["x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})
    write("n3.json", algebra_to_json(n3))
    code, out, _ = run("derivations", "n3.json", "--json")
    assert code == EXIT_OK
    res = json.loads(out)["results"]
    assert (res["der_dim"], res["inner_dim"], res["sout_dim"]) == (6, 2, 3)


def test_usage_errors():
    assert run()[0] == EXIT_USAGE
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("lattice")[0] == EXIT_USAGE
    assert run("--approx", "-1", "catalog", "list")[0] == EXIT_USAGE


def test_verify_default_run():
    code, out, _ = run("verify-paper", "--json")
    res = json.loads(out)["results"]
    assert code == EXIT_OK
    assert res["total"] >= 20 and res["passed"] == res["total"]
