import json

import pytest
from hypothesis import given

from lie5.catalog import emit
from lie5.jsonio import (
    FormatError,
    algebra_from_json,
    algebra_to_dict,
    algebra_to_json,
    matrix_from_json,
    matrix_to_json,
    representation_from_json,
)
from lie5.liealg import JacobiError, abelian, r2_standard
from lie5.qlinalg import QMat

from conftest import CATALOG_NAMES, catalog_algebras, matrices

N3_TEXT = """{"name": "n3", "dim": 3, "basis": ["x1", "x2", "x3"],
 "brackets": [{"i": 3, "j": 2, "terms": [{"k": 1, "c": "1"}]}]}"""


def test_parse_n3():
    g = algebra_from_json(N3_TEXT)
    assert g.dim == 3 and g.basis_bracket(2, 1) == (1, 0, 0)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_round_trip_catalog(name):
    g = emit(name)
    text = algebra_to_json(g)
    h = algebra_from_json(text)
    assert h.name == g.name and h.basis_names == g.basis_names and h.structure == g.structure
    assert algebra_to_json(h) == text


@given(catalog_algebras())
def test_round_trip_random_basis(g):
    h = algebra_from_json(algebra_to_json(g))
    assert h.structure == g.structure


def _mutate(**changes):
    d = json.loads(N3_TEXT)
    d.update(changes)
    return json.dumps(d)


@pytest.mark.parametrize(
    "text",
    [
        _mutate(dim=4),
        _mutate(brackets=[{"i": 2, "j": 3, "terms": []}]),
        _mutate(brackets=[{"i": 3, "j": 2, "terms": []}, {"i": 3, "j": 2, "terms": []}]),
        _mutate(brackets=[{"i": 3, "j": 2, "terms": [{"k": 1, "c": 0.5}]}]),
        _mutate(brackets=[{"i": 3, "j": 2, "terms": [{"k": 9, "c": "1"}]}]),
        _mutate(extra=1),
        _mutate(basis=["a", "a", "b"]),
        "[1, 2]",
    ],
)
def test_format_errors(text):
    with pytest.raises(FormatError):
        algebra_from_json(text)


def test_syntax_error_location():
    with pytest.raises(FormatError) as exc:
        algebra_from_json('{"name": "x",\n  "dim": }')
    assert (exc.value.line, exc.value.col) == (2, 10)


def test_jacobi_failure_on_load():
    text = json.dumps({
        "name": "bad", "dim": 3, "basis": ["e1", "e2", "e3"],
        "brackets": [
            {"i": 3, "j": 2, "terms": [{"k": 1, "c": "1"}]},
            {"i": 3, "j": 1, "terms": [{"k": 2, "c": "1"}]},
            {"i": 2, "j": 1, "terms": [{"k": 1, "c": "1"}]},
        ],
    })
    with pytest.raises(JacobiError) as exc:
        algebra_from_json(text)
    assert exc.value.failure.triple == (1, 2, 3)


@given(matrices(square=False))
def test_matrix_round_trip(m):
    assert matrix_from_json(matrix_to_json(m)) == m


def test_representation_parse():
    m1, m2 = r2_standard(3)
    text = json.dumps({"module_dim": 3, "matrices": [matrix_to_json(m1), matrix_to_json(m2)]})
    rep = representation_from_json(text, abelian(2))
    assert rep.matrices == (m1, m2)
    with pytest.raises(FormatError):
        representation_from_json(json.dumps({"module_dim": 2, "matrices": [matrix_to_json(m1), matrix_to_json(m2)]}), abelian(2))


def test_emit_output_is_the_documented_format():
    d = algebra_to_dict(emit("Nil4×E"))
    assert set(d) == {"name", "dim", "basis", "brackets"}
    for br in d["brackets"]:
        assert br["i"] > br["j"] >= 1
        assert all(isinstance(t["c"], str) for t in br["terms"])
