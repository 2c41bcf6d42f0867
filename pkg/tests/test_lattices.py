import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie5.intervals import Interval
from lie5.lattices import (
    DependentUnits,
    HolonomiesDoNotCommute,
    IntQuartic,
    InvalidNumberField,
    LatticePresentation,
    NotAUnit,
    NotIntegral,
    NotUnimodularMatrix,
    NumberFieldData,
    admissible_quartic,
    certify_holonomy,
    dirichlet_certificate,
    dirichlet_lattice,
    lattice_from_integer_matrix,
    log_embedding,
    lorentz_block_report,
    unit_action_matrix,
    unit_check,
)
from lie5.qlinalg import Poly, QMat, exp_nilpotent

P = Poly([1, -3, 0, 1])  # x^3 - 3x + 1
ALPHA = Poly([0, 1])
ONE_MINUS_ALPHA = Poly([1, -1])
W = Fraction(1, 2**16)

# roots of x^3 - 3x + 1 are 2 cos(2 pi k / 9) for k = 1, 2, 4
ROOTS = sorted(2 * math.cos(2 * math.pi * k / 9) for k in (1, 2, 4))


def nf():
    return NumberFieldData(P)


# -- quartics ----------------------------------------------------------------


def test_quartic_examples():
    assert admissible_quartic(IntQuartic(-10, 23, -10))
    rep = admissible_quartic(IntQuartic(-4, 6, -4))
    assert not rep and "repeated roots" in rep.reasons
    rep = admissible_quartic(IntQuartic(1, 1, 1))
    assert not rep and "only 0 real roots" in rep.reasons


def test_quartic_type_check():
    with pytest.raises(TypeError):
        IntQuartic(1.5, 0, 0)


def _oracle_admissible(a, b, c):
    import sympy

    x = sympy.Symbol("x")
    p = sympy.Poly(x**4 + a * x**3 + b * x**2 + c * x + 1, x)
    if sympy.gcd(p, p.diff(x)).degree() > 0:
        return False
    roots = sympy.real_roots(p)
    return len(roots) == 4 and all(r > 0 for r in roots)


@given(st.integers(-12, 12), st.integers(-30, 30), st.integers(-12, 12))
def test_quartic_reversal_and_oracle(a, b, c):
    q = IntQuartic(a, b, c)
    got = admissible_quartic(q).admissible
    assert got == admissible_quartic(q.reversal()).admissible
    assert got == _oracle_admissible(a, b, c)


# -- integer presentations ------------------------------------------------------


def test_integer_presentations():
    j4 = QMat([[1 if c == r + 1 else 0 for c in range(4)] for r in range(4)])
    pres = lattice_from_integer_matrix(exp_nilpotent(j4.scale(6)))
    assert pres.kind == "Z4_by_Z"
    assert pres.holonomy[0] == QMat([[1, 6, 18, 36], [0, 1, 6, 18], [0, 0, 1, 6], [0, 0, 0, 1]])
    lattice_from_integer_matrix(QMat([[2, 1, 2, 1], [1, 1, 1, 1], [0, 0, 2, 1], [0, 0, 1, 1]]))
    lattice_from_integer_matrix(QMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]))
    for d in (0, 1):
        lattice_from_integer_matrix(QMat([[1, 0, 0, 0], [d, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2]]))
    with pytest.raises(NotUnimodularMatrix):
        lattice_from_integer_matrix(QMat([[1, 0], [0, 2]]))
    with pytest.raises(NotIntegral):
        lattice_from_integer_matrix(QMat([[1, Fraction(1, 2)], [0, 1]]))
    with pytest.raises(HolonomiesDoNotCommute):
        LatticePresentation("Z3_by_Z2", (QMat([[1, 1], [0, 1]]), QMat([[1, 0], [1, 1]])))


# -- cubic field units --------------------------------------------------------------


def test_number_field_validation():
    with pytest.raises(InvalidNumberField):
        NumberFieldData(Poly([-1, 0, 0, 1]))  # x^3 - 1 has the root 1
    with pytest.raises(InvalidNumberField):
        NumberFieldData(Poly([-2, 0, 0, 1]))  # one real root


def test_unit_checks():
    assert unit_check(nf(), ALPHA)
    assert unit_check(nf(), ONE_MINUS_ALPHA)
    assert not unit_check(nf(), Poly([0, 2]))
    # the known inverses
    assert nf().mul(ALPHA, Poly([3, 0, -1])) == Poly([1])
    assert nf().mul(ONE_MINUS_ALPHA, Poly([2, -1, -1])) == Poly([1])


def test_unit_action_matrices():
    assert unit_action_matrix(nf(), ALPHA) == QMat([[0, 0, -1], [1, 0, 3], [0, 1, 0]])
    assert unit_action_matrix(nf(), ONE_MINUS_ALPHA) == QMat([[1, 0, 1], [-1, 1, -3], [0, -1, 1]])
    assert unit_action_matrix(nf(), ALPHA, 0) == QMat.identity(3)
    with pytest.raises(NotAUnit):
        unit_action_matrix(nf(), Poly([0, 2]))


@given(st.sampled_from([ALPHA, ONE_MINUS_ALPHA, Poly([2, -1, -1])]), st.integers(0, 4))
def test_unit_action_powers(u, k):
    assert unit_action_matrix(nf(), u, 2 * k) == unit_action_matrix(nf(), u, 2) ** k
    assert unit_action_matrix(nf(), u, -2) @ unit_action_matrix(nf(), u, 2) == QMat.identity(3)


@pytest.mark.parametrize("u,f", [(ALPHA, lambda r: r), (ONE_MINUS_ALPHA, lambda r: 1 - r)])
def test_log_embedding_matches_float(u, f):
    logs = log_embedding(nf(), u, W)
    assert len(logs) == 3
    for iv, r in zip(logs, ROOTS):
        assert iv.width <= W
        want = math.log(abs(f(r)))
        assert iv.lo - Fraction(1, 10**9) <= Fraction(want) <= iv.hi + Fraction(1, 10**9)
    total = logs[0] + logs[1] + logs[2]
    assert total.contains_zero()


def test_log_embedding_reference_values():
    # one-decimal reference log vectors (0.6, -1, 0.4) and (1, -0.4, -0.6) up to ordering and rounding
    a = sorted(float(iv.mid) for iv in log_embedding(nf(), ALPHA, W))
    b = sorted(float(iv.mid) for iv in log_embedding(nf(), ONE_MINUS_ALPHA, W))
    assert all(abs(x - y) <= 0.07 for x, y in zip(a, sorted([0.6, -1, 0.4])))
    assert all(abs(x - y) <= 0.07 for x, y in zip(b, sorted([1, -0.4, -0.6])))


def test_dirichlet_lattice():
    pres = dirichlet_lattice(nf(), ALPHA, ONE_MINUS_ALPHA, W)
    a = QMat([[0, 0, -1], [1, 0, 3], [0, 1, 0]])
    b = QMat([[1, 0, 1], [-1, 1, -3], [0, -1, 1]])
    assert pres.kind == "Z3_by_Z2"
    assert pres.holonomy == (a @ a, b @ b)
    assert pres.holonomy[0].commutator(pres.holonomy[1]).is_zero()
    assert all(m.det() == 1 for m in pres.holonomy)
    cert = dirichlet_certificate(nf(), ALPHA, ONE_MINUS_ALPHA, W)
    assert not cert.minor_enclosure.contains_zero()


@pytest.mark.parametrize("u2", [ALPHA, Poly([0, 0, 1])])
def test_dependent_units(u2):
    with pytest.raises(DependentUnits):
        dirichlet_lattice(nf(), ALPHA, u2, W)


# -- holonomy certificates -----------------------------------------------------------


def test_certify_holonomy():
    a = QMat.diag([1, -1])
    cert = certify_holonomy(a, QMat([[2, 1], [1, 1]]), W)
    assert cert.ok
    golden = 2 * math.log((1 + math.sqrt(5)) / 2)
    # t = +-2 log(golden ratio), sign depending on the eigenvalue order
    slack = Interval(cert.scale.lo - Fraction(1, 10**9), cert.scale.hi + Fraction(1, 10**9))
    assert Fraction(golden) in slack or Fraction(-golden) in slack
    assert cert.scale.width <= Fraction(1, 2**10)
    assert not certify_holonomy(QMat.diag([1, -1]), QMat([[0, 1], [-1, 0]]), W).ok
    assert not certify_holonomy(QMat([[0, 1], [0, 0]]), QMat.identity(2), W).ok
    assert certify_holonomy(QMat([[0, 1], [0, 0]]), QMat([[1, 1], [0, 1]]), W).ok


def test_lorentz_block_report():
    rep = lorentz_block_report(W)
    assert rep["exact_ok"] and rep["interval_ok"]
    s = math.log((3 + math.sqrt(5)) / 2) / math.sqrt(5)
    assert rep["s"].lo - Fraction(1, 10**9) <= Fraction(s) <= rep["s"].hi + Fraction(1, 10**9)
    # the alternative with log(sqrt 5) in the denominator does not fit
    assert not rep["alt_s_fits"]
