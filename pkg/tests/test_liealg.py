from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie5.catalog import emit
from lie5.liealg import (
    ActionsDoNotCommute,
    DimensionMismatch,
    JacobiError,
    JacobiFailure,
    LieAlgebra,
    LieError,
    NotADerivation,
    NotAnIdeal,
    Representation,
    abelian,
    ad,
    center,
    centralizer,
    change_basis,
    derived_series,
    direct_sum,
    is_abelian,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    lower_central_series,
    quotient,
    r2_embedding_class,
    r2_standard,
    semidirect_sum,
    trace_on,
    validate,
)
from lie5.qlinalg import QMat, Subspace
from lie5.structure import nilradical

from conftest import CATALOG_NAMES, catalog_algebras, invertible, small_ints


def n3():
    return LieAlgebra.from_brackets("n3", ["x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


def n4():
    return LieAlgebra.from_brackets("n4", ["x1", "x2", "x3", "x4"], {("x4", "x3"): {"x2": 1}, ("x4", "x2"): {"x1": 1}})


def shift(n):
    return QMat([[1 if c == r + 1 else 0 for c in range(n)] for r in range(n)])


def jacobiator_zero(n, struct):
    """Independent Jacobi check on a raw {(i, j): {k: c}} table with i > j."""
    def br(u, v):
        out = [Fraction(0)] * n
        for i in range(n):
            for j in range(n):
                if u[i] and v[j] and i != j:
                    key, s = ((i, j), 1) if i > j else ((j, i), -1)
                    for k, c in struct.get(key, {}).items():
                        out[k] += s * u[i] * v[j] * c
        return out

    e = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    for i, j, k in combinations(range(n), 3):
        t = [a + b + c for a, b, c in zip(br(e[i], br(e[j], e[k])), br(e[j], br(e[k], e[i])), br(e[k], br(e[i], e[j])))]
        if any(t):
            return False
    return True


# -- validate ---------------------------------------------------------------


def test_validate_examples():
    assert validate(abelian(5)) is None
    assert validate(n3()) is None
    bad = LieAlgebra.from_brackets(
        "bad", ["e1", "e2", "e3"], {("e3", "e2"): {"e1": 1}, ("e3", "e1"): {"e2": 1}, ("e2", "e1"): {"e1": 1}}, check=False
    )
    assert validate(bad) == JacobiFailure((1, 2, 3))
    with pytest.raises(JacobiError) as exc:
        LieAlgebra("bad", bad.basis_names, {ij: dict(enumerate(v)) for ij, v in bad.structure.items()})
    assert exc.value.failure.triple == (1, 2, 3)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_validate_accepts_catalog(name):
    assert validate(emit(name)) is None


def _mutations():
    g = emit("Nil4⋊R(4→3→1)")
    for key, vec in g.structure.items():
        for k, c in enumerate(vec):
            if c:
                yield key, k


@pytest.mark.parametrize("key,k", list(_mutations()))
def test_validate_agrees_on_sign_mutations(key, k):
    g = emit("Nil4⋊R(4→3→1)")
    struct = {ij: {a: c for a, c in enumerate(v) if c} for ij, v in g.structure.items()}
    struct[key][k] = -struct[key][k]
    h = LieAlgebra("mut", g.basis_names, struct, check=False)
    assert (validate(h) is None) == jacobiator_zero(5, struct)


def test_bad_structure_indices():
    with pytest.raises(LieError):
        LieAlgebra("x", ["a", "b"], {(0, 1): {0: 1}})
    with pytest.raises(LieError):
        LieAlgebra("x", ["a", "a"], {})
    with pytest.raises(LieError):
        LieAlgebra.from_brackets("x", ["a", "b"], {("a", "b"): {"a": 1}, ("b", "a"): {"a": 1}})


def test_antisymmetry_structural():
    g = n3()
    assert g.basis_bracket(2, 1) == tuple(-x for x in g.basis_bracket(1, 2))
    assert g.basis_bracket(1, 1) == (0, 0, 0)


# -- ad -----------------------------------------------------------------------


def test_ad_examples():
    assert ad(abelian(3), (1, 2, 3)).is_zero()
    g = n4()
    a = ad(g, g.basis_vector(3))
    assert a == QMat([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    h = emit("Heis-Lorentz", d=3)
    z = ad(h, h.basis_vector(4))
    # basis y, x1, x2, x3, z
    assert z.col(2) == (0, 0, 1, 0, 0)
    assert z.col(3) == (0, 0, 0, -1, 0)
    assert z.col(0) == (0, 3, 0, 0, 0)
    with pytest.raises(DimensionMismatch):
        ad(g, (1, 2))


@given(catalog_algebras(), st.lists(small_ints, min_size=5, max_size=5), st.lists(small_ints, min_size=5, max_size=5))
def test_ad_is_representation(g, x, y):
    lhs = ad(g, g.bracket(x, y))
    assert lhs == ad(g, x).commutator(ad(g, y))


# -- series -----------------------------------------------------------------


def test_series_examples():
    assert [s.dim for s in lower_central_series(abelian(3))] == [3, 0]
    assert [s.dim for s in lower_central_series(emit("R4⋊R[x^4]"))] == [5, 3, 2, 1, 0]
    assert [s.dim for s in lower_central_series(emit("Nil4⋊R(3→1)"))] == [5, 2, 1, 0]
    assert [s.dim for s in derived_series(emit("Heis-Lorentz"))] == [5, 3, 1, 0]


@given(catalog_algebras())
def test_series_terms_are_ideals(g):
    for s in lower_central_series(g) + derived_series(g):
        assert is_ideal(g, s)


# -- center, centralizer, traces ------------------------------------------------


def test_center_examples():
    assert center(n3()) == Subspace.coordinate(3, [0])
    sol = emit("Sol41×E")
    assert center(sol) == Subspace.coordinate(5, [0, 1])
    g = emit("R4⋊R[x^4]")
    c = centralizer(g, lower_central_series(g)[1])
    assert c == Subspace.coordinate(5, [0, 1, 2, 3])
    assert is_abelian(g, c)


def test_unimodular_examples():
    for name in CATALOG_NAMES:
        assert is_unimodular(emit(name))
    aff = LieAlgebra.from_brackets("aff", ["e1", "e2"], {("e2", "e1"): {"e1": 1}})
    assert not is_unimodular(aff)
    assert is_solvable(aff) and not is_nilpotent(aff)


def test_trace_on_examples():
    g = emit("R3⋊{xyz=1}^0")
    r3 = Subspace.coordinate(5, [0, 1, 2])
    assert trace_on(g, r3) == [0] * 5
    with pytest.raises(NotAnIdeal):
        trace_on(n3(), Subspace.coordinate(3, [1]))


@given(catalog_algebras())
def test_trace_on_abelian_quotient_ideals(g):
    # the nilradical and [g, g] both have abelian quotients here
    for s in (nilradical(g), derived_series(g)[1]):
        assert all(t == 0 for t in trace_on(g, s))


# -- quotient and direct sum ----------------------------------------------------


def test_quotient_examples():
    q = quotient(n3(), center(n3()))
    assert q.dim == 2 and q.is_abelian_algebra()
    g = emit("R4⋊R[x^2,x-1,x+1]")
    assert quotient(g, nilradical(g)).dim == 1
    with pytest.raises(NotAnIdeal):
        quotient(n3(), Subspace.coordinate(3, [1]))


def test_direct_sum_example():
    s = direct_sum(abelian(1, basis_names=["y"]), n3())
    assert s.dim == 4
    assert center(s).dim == 2
    assert lower_central_series(s)[1].dim == 1


@given(catalog_algebras(), st.integers(0, 10))
def test_quotient_is_valid(g, pick):
    ideals = lower_central_series(g) + derived_series(g) + [nilradical(g), center(g)]
    i = ideals[pick % len(ideals)]
    q = quotient(g, i)
    assert validate(q) is None
    assert q.dim == g.dim - i.dim


# -- semidirect sums -------------------------------------------------------------


def test_semidirect_examples():
    g = semidirect_sum(abelian(4), 1, [shift(4)])
    assert [s.dim for s in lower_central_series(g)] == [5, 3, 2, 1, 0]
    g = semidirect_sum(abelian(3), 2, [QMat.diag([1, 0, -1]), QMat.diag([0, 1, -1])])
    assert g.same_structure(emit("R3⋊{xyz=1}^0"))
    with pytest.raises(ActionsDoNotCommute):
        semidirect_sum(abelian(2), 2, [QMat([[0, 1], [0, 0]]), QMat([[1, 0], [0, 0]])])
    with pytest.raises(NotADerivation):
        semidirect_sum(n3(), 1, [QMat.diag([1, 1, 1])])


@given(invertible(3))
def test_semidirect_with_derivation_is_valid(p):
    # any matrix is a derivation of abelian R^3
    g = semidirect_sum(abelian(3), 1, [p])
    assert validate(g) is None


def test_change_basis_round_trip():
    g = emit("Nil4⋊R(4→3→1)")
    p = QMat([[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 2, 0], [0, 0, 0, 1, 0], [1, 0, 0, 0, 1]])
    h = change_basis(g, p)
    back = change_basis(h, p.inverse())
    assert back.same_structure(g)


# -- representations ---------------------------------------------------------------


def test_representation_checks():
    g = n3()
    Representation.adjoint(g)
    Representation.trivial(g, 2)
    with pytest.raises(LieError):
        Representation(g, [QMat.identity(2), QMat.identity(2), QMat.identity(2)])


# -- abelian subalgebras of sl(3) ----------------------------------------------------


def test_r2_examples():
    assert r2_embedding_class(QMat.diag([1, 0, -1]), QMat.diag([0, 1, -1])) == "φ6"
    assert r2_embedding_class(QMat.zeros(3, 3), QMat.zeros(3, 3)) == "NotFaithful"
    assert r2_embedding_class(*r2_standard(1)) == "φ1"
    assert r2_embedding_class(QMat.identity(3), QMat.diag([1, 2, -3])) == "NotTraceless"
    assert r2_embedding_class(QMat([[0, 1, 0], [0, 0, 0], [0, 0, 0]]), QMat([[0, 0, 0], [1, 0, 0], [0, 0, 0]])) == "NotCommuting"


@pytest.mark.parametrize("k", range(1, 7))
def test_r2_standard_classes(k):
    assert r2_embedding_class(*r2_standard(k)) == f"φ{k}"


@given(st.integers(1, 6), invertible(3), st.lists(small_ints, min_size=4, max_size=4))
def test_r2_class_invariance(k, p, c):
    m1, m2 = r2_standard(k)
    q = p.inverse()
    m1, m2 = q @ m1 @ p, q @ m2 @ p
    if c[0] * c[3] - c[1] * c[2] == 0:
        c = [1, 0, 0, 1]
    n1 = m1.scale(c[0]) + m2.scale(c[1])
    n2 = m1.scale(c[2]) + m2.scale(c[3])
    assert r2_embedding_class(n1, n2) == f"φ{k}"
