import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie5.catalog import (
    DIAGONAL,
    InvalidParams,
    PreconditionViolated,
    UnknownGeometry,
    emit,
    export_catalog,
    fingerprint,
    get_record,
    identify,
    isotropy_poset,
    list_geometries,
    normalize_action_poly,
    normalized_diagonal_params,
    scale_normalize,
    symmetric_spaces,
    verify_certificate,
)
from lie5.checks import diagonal_param_triples, SEED
from lie5.jsonio import dumps
from lie5.liealg import LieAlgebra, abelian, ad, change_basis, is_solvable, is_unimodular, semidirect_sum, validate
from lie5.qlinalg import Poly, QMat, char_poly

from conftest import CATALOG_NAMES, catalog_algebras, invertible

GOLDEN = Path(__file__).parent / "golden" / "catalog.json"
NILPOTENT = {"R4⋊R[x^4]", "Nil4×E", "Nil4⋊R(3→1)", "Nil4⋊R(4→3→1)"}


def brackets(g):
    """{(name_i, name_j): {name_k: c}} for the stored i > j pairs."""
    n = g.basis_names
    return {(n[i], n[j]): {n[k]: c for k, c in enumerate(v) if c} for (i, j), v in g.structure.items()}


def diag_poly(vals):
    return Poly.from_roots(vals)


# -- emit -----------------------------------------------------------------------


def test_emit_examples():
    g = emit("Nil4⋊R(4→3→1)")
    assert brackets(g) == {
        ("x4", "x3"): {"x2": 1},
        ("x4", "x2"): {"x1": 1},
        ("x5", "x3"): {"x1": 1},
        ("x5", "x4"): {"x3": 1},
    }
    g = emit("Sol41×E")
    assert brackets(g) == {("x3", "x2"): {"x1": 1}, ("z", "x2"): {"x2": 1}, ("z", "x3"): {"x3": -1}}
    g = emit(DIAGONAL, a=1, b=2, c=3)
    z = ad(g, g.basis_vector(4))
    assert [z[i, i] for i in range(4)] == [1, 2, 3, -6]


def test_emit_errors():
    with pytest.raises(UnknownGeometry):
        emit("Nil5")
    with pytest.raises(InvalidParams):
        emit(DIAGONAL, a=1, b=1, c=2)
    with pytest.raises(InvalidParams):
        emit(DIAGONAL, a=1, b=2)
    with pytest.raises(InvalidParams):
        emit("Heis-Lorentz", d=0)
    with pytest.raises(InvalidParams):
        emit("Nil4×E", q=1)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_validity(name):
    g = emit(name)
    assert validate(g) is None and is_unimodular(g) and is_solvable(g)
    assert fingerprint(g).nilpotent == (name in NILPOTENT)


# -- fingerprints and normalization ----------------------------------------------


def test_fingerprint_examples():
    assert fingerprint(emit("R4⋊R[x^4]")).lcs_dims == (5, 3, 2, 1, 0)
    assert fingerprint(emit("Heis-Lorentz", d=1)).center_dim == 1
    fp = fingerprint(abelian(5))
    assert fp.nilpotent and fp.lcs_dims == (5, 0)


def test_fingerprints_pairwise_distinct():
    fps = [fingerprint(emit(n)) for n in CATALOG_NAMES]
    assert len(set(fps)) == len(fps)


def test_normalize_examples():
    p1 = normalize_action_poly(diag_poly([1, 2, 3, -6]))
    p2 = normalize_action_poly(diag_poly([2, 4, 6, -12]))
    assert p1 == p2
    assert p1 != normalize_action_poly(diag_poly([1, 2, 4, -7]))
    # c2 = 0 and c3 = 0: the x^1 coefficient carries the scale
    p = Poly([-3, 8, 0, 0, 1])
    norm, t = scale_normalize(p)
    assert norm.coeff(2) == 0 and norm.coeff(1) > 0
    assert norm == Poly([-3 * t**4, 8 * t**3, 0, 0, 1])
    with pytest.raises(PreconditionViolated):
        normalize_action_poly(Poly([1, 0, 0, 1, 1]))  # x^3 coefficient
    with pytest.raises(PreconditionViolated):
        normalize_action_poly(diag_poly([1, 1, -1, -1]))


@given(st.sampled_from([(1, 2, 3), (-2, -1, 1), (1, 3, 7), (Fraction(1, 2), 2, -5)]), st.sampled_from([1, -1, 2, Fraction(-1, 3), 5]))
def test_normalization_scale_invariant(abc, s):
    vals = list(abc) + [-sum(abc)]
    p = normalize_action_poly(diag_poly(vals))
    q = normalize_action_poly(diag_poly([s * Fraction(v) for v in vals]))
    assert p == q
    assert normalize_action_poly(p) == p
    params = normalized_diagonal_params(p)
    assert normalized_diagonal_params(diag_poly(list(params) + [-sum(params)])) == params


# -- identification ----------------------------------------------------------------


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_identify_round_trip(name):
    res = identify(emit(name))
    assert res.ok and res.name == name
    assert res.trace == get_record(name).leaf


@pytest.mark.parametrize("abc", diagonal_param_triples(25, SEED))
def test_identify_diagonal_family(abc):
    a, b, c = abc
    res = identify(emit(DIAGONAL, a=a, b=b, c=c))
    assert res.name == DIAGONAL
    vals = list(abc) + [-sum(abc)]
    assert res.params == dict(zip("abc", normalized_diagonal_params(diag_poly(vals))))


def test_identify_default_diagonal_params():
    res = identify(emit(DIAGONAL))
    assert res.params == {"a": -2, "b": -1, "c": 1}


def test_identify_rejections():
    assert identify(abelian(5)).reason == "AbelianInput"
    g = semidirect_sum(abelian(4), 1, [QMat.diag([1, 1, -1, -1])])
    res = identify(g)
    assert not res.ok
    aff = LieAlgebra.from_brackets("aff+R3", ["a", "b", "c", "d", "e"], {("b", "a"): {"a": 1}})
    assert identify(aff).reason == "NotUnimodular"
    sl2r2 = LieAlgebra.from_brackets(
        "sl2+R2", ["h", "e", "f", "u", "v"], {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}}
    )
    assert identify(sl2r2).reason == "NotSolvable"
    assert identify(abelian(4)).reason == "WrongDimension"


@given(catalog_algebras())
def test_identify_basis_invariant(g):
    assert identify(g).ok


# -- static data --------------------------------------------------------------------


def test_static_records():
    assert len(list_geometries()) == 10
    assert get_record("R4⋊R[x^4]").patera_name == "A_{5,2}"
    assert get_record("A_{5,2}").name == "R4⋊R[x^4]"
    assert ("so3_5", "s1_half") in isotropy_poset()["edges"]
    assert len(isotropy_poset()["edges"]) == 20
    assert len(symmetric_spaces()) == 5


@pytest.mark.parametrize("rec", list_geometries(), ids=lambda r: r.name)
def test_certificates_verify(rec):
    checks = verify_certificate(rec)
    assert checks and all(checks.values())


def test_model_condition_flag():
    assert get_record(DIAGONAL).model_condition.startswith("parameter dependent")
    assert all(r.model_condition == "certified" for r in list_geometries() if r.name != DIAGONAL)


def test_catalog_export_golden():
    text = dumps(export_catalog())
    assert text == dumps(export_catalog())
    assert json.loads(text) == json.loads(GOLDEN.read_text(encoding="utf-8"))
