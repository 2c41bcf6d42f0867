import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie5.catalog import emit
from lie5.derivations import (
    Flag,
    InvalidFlag,
    UnknownDescriptor,
    bracket_closure_check,
    derivation_algebra,
    descriptor_subspace,
    sout_matches_parametrization,
    verify_characteristic_flag,
)
from lie5.liealg import LieAlgebra, abelian, center, is_derivation
from lie5.qlinalg import QMat, Subspace

from conftest import CATALOG_NAMES, catalog_algebras


def n3():
    return LieAlgebra.from_brackets("n3", ["x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


def n4():
    return LieAlgebra.from_brackets("n4", ["x1", "x2", "x3", "x4"], {("x4", "x3"): {"x2": 1}, ("x4", "x2"): {"x1": 1}})


def rn3():
    return LieAlgebra.from_brackets("R⊕n3", ["y", "x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


E = QMat.unit


def test_derivation_examples():
    ds = derivation_algebra(abelian(2))
    assert ds.dim == 4 and ds.inner.dim == 0
    ds = derivation_algebra(n3())
    assert (ds.dim, ds.inner.dim, ds.sout_dim) == (6, 2, 3)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_derivations_satisfy_leibniz(name):
    g = emit(name)
    ds = derivation_algebra(g)
    for m in ds.matrices():
        assert is_derivation(g, m)
    assert ds.inner.dim == g.dim - center(g).dim
    assert ds.inner.issubset(ds.all)
    for m in ds.sout_representatives:
        assert m.trace() == 0


@given(catalog_algebras(), st.integers(0, 2**31))
def test_traceless_class_stable_under_inner(g, seed):
    rng = random.Random(seed)
    ds = derivation_algebra(g)
    for m in g.ad_basis():
        assert m.trace() == 0
    for rep in ds.sout_representatives:
        shifted = rep
        for m in g.ad_basis():
            shifted = shifted + m.scale(rng.randint(-3, 3))
        assert shifted.trace() == 0


def test_sout_parametrizations():
    n4_pattern = {"a": QMat.diag([2, -1, -4, 3]), "b": E(4, 0, 2), "c": E(4, 2, 3)}
    assert sout_matches_parametrization(n4(), n4_pattern)
    rn3_pattern = {
        "d": E(4, 1, 0),
        "e": E(4, 0, 2),
        "f": E(4, 0, 3),
        "a": E(4, 2, 2) - E(4, 3, 3),
        "b": E(4, 2, 3),
        "c": E(4, 3, 2),
    }
    cons = [Subspace.coordinate(4, [1]), Subspace.coordinate(4, [0, 1])]
    assert sout_matches_parametrization(rn3(), rn3_pattern, cons)
    assert not sout_matches_parametrization(n3(), {"a": QMat.diag([0, 1, -1])})
    # a pattern with one slot too many is not a parametrization
    assert not sout_matches_parametrization(n4(), dict(n4_pattern, d=E(4, 0, 1)))


def test_closure_examples():
    rep = bracket_closure_check(derivation_algebra(n3()).sout_representatives)
    assert rep.closed and rep.perfect and rep.dim == 3 and rep.killing_rank == 3
    rep = bracket_closure_check([QMat.identity(2)])
    assert rep.closed and not rep.perfect
    rep = bracket_closure_check([E(2, 0, 1), E(2, 1, 0)])
    assert not rep.closed


FLAGS = {
    "R4⋊R[x^4]": ([["x1"], ["x1", "x2"], ["x1", "x2", "x3"], ["x1", "x2", "x3", "x4"]],
                  [("lcs", 4), ("lcs", 3), ("lcs", 2), ("bracket_rank_le", 1)]),
    "Nil4×E": ([["x1"], ["x1", "x2"], ["x1", "x2", "x4"], ["x1", "x2", "x3", "x4"]],
               [("lcs", 3), ("lcs", 2), ("sum", ("lcs", 2), ("center",)), ("bracket_rank_le", 1)]),
    "Nil4⋊R(3→1)": ([["x1"], ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x3", "x5"]],
                    [("lcs", 3), ("lcs", 2), ("bracket_into", ("lcs", 3)), ("centralizer", ("lcs", 2))]),
    "Nil4⋊R(4→3→1)": ([["x1"], ["x1", "x2"], ["x1", "x2", "x3"], ["x1", "x2", "x3", "x5"]],
                      [("lcs", 4), ("lcs", 3), ("lcs", 2), ("bracket_rank_le", 2)]),
}


@pytest.mark.parametrize("name", list(FLAGS))
def test_catalog_flags(name):
    g = emit(name)
    terms, descs = FLAGS[name]
    assert verify_characteristic_flag(g, Flag.from_names(g, terms), descs)


def test_wrong_flag_rejected():
    g = emit("R4⋊R[x^4]")
    terms, descs = FLAGS["R4⋊R[x^4]"]
    bad = [["x2"]] + [["x2"] + [t for t in term if t != "x2"] for term in terms[1:]]
    assert not verify_characteristic_flag(g, Flag.from_names(g, bad), descs)
    # a non-characteristic term fails even with a rank descriptor
    g = emit("Nil4⋊R(4→3→1)")
    terms, descs = FLAGS["Nil4⋊R(4→3→1)"]
    bad = terms[:3] + [["x1", "x2", "x3", "x4"]]
    assert not verify_characteristic_flag(g, Flag.from_names(g, bad), descs)


def test_flag_shape_errors():
    g = emit("R4⋊R[x^4]")
    with pytest.raises(InvalidFlag):
        Flag.from_names(g, [["x1"], ["x2", "x3"]])
    with pytest.raises(InvalidFlag):
        Flag.from_names(g, [["x1"], ["x2", "x3"], ["x1", "x2", "x3"], ["x1", "x2", "x3", "x4"]])
    with pytest.raises(UnknownDescriptor):
        descriptor_subspace(g, ("weird",))
