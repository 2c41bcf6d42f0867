"""Lattice-existence certificates.

Three kinds of certificate appear:

* an integer quartic ``x^4 + a x^3 + b x^2 + c x + 1`` with distinct positive
  real roots, the characteristic polynomial of a holonomy matrix;
* explicit integer holonomy matrices for a semidirect product ``N x| Z^k``;
* the Dirichlet construction: ``Z[alpha]`` acted on by squares of two
  independent units of a totally real cubic field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .intervals import Interval, default_width, log_interval, sqrt_interval
from .qlinalg import (
    LinalgError,
    Poly,
    QMat,
    char_poly,
    poly_gcd,
    real_root_intervals,
    resultant,
    squarefree_part,
    sturm_count,
    to_rat,
)
from .structure import jordan_profile

__all__ = [
    "LatticeError",
    "NotIntegral",
    "NotUnimodularMatrix",
    "HolonomiesDoNotCommute",
    "NotAUnit",
    "DependentUnits",
    "InvalidNumberField",
    "IntQuartic",
    "QuarticReport",
    "admissible_quartic",
    "LatticePresentation",
    "LATTICE_KINDS",
    "lattice_from_integer_matrix",
    "NumberFieldData",
    "unit_check",
    "unit_action_matrix",
    "log_embedding",
    "dirichlet_lattice",
    "DirichletCertificate",
    "dirichlet_certificate",
    "eval_interval",
    "root_log_enclosures",
    "certify_holonomy",
    "HolonomyCertificate",
    "QSqrt5",
    "lorentz_block_report",
]


class LatticeError(ValueError):
    pass


class NotIntegral(LatticeError):
    pass


class NotUnimodularMatrix(LatticeError):
    pass


class HolonomiesDoNotCommute(LatticeError):
    pass


class NotAUnit(LatticeError):
    pass


class DependentUnits(LatticeError):
    pass


class InvalidNumberField(LatticeError):
    pass


# ---------------------------------------------------------------------------
# integer quartics


@dataclass(frozen=True)
class IntQuartic:
    """``x^4 + a x^3 + b x^2 + c x + 1``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError("IntQuartic coefficients must be integers")

    def poly(self) -> Poly:
        return Poly([1, self.c, self.b, self.a, 1])

    def reversal(self) -> "IntQuartic":
        # x^4 p(1/x) = x^4 + c x^3 + b x^2 + a x + 1
        return IntQuartic(self.c, self.b, self.a)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "poly": str(self.poly())}


@dataclass(frozen=True)
class QuarticReport:
    admissible: bool
    reasons: tuple

    def __bool__(self):
        return self.admissible


def admissible_quartic(p: IntQuartic) -> QuarticReport:
    """Squarefree with four real roots, all positive."""
    poly = p.poly()
    reasons = []
    if poly_gcd(poly, poly.derivative()).degree > 0:
        reasons.append("repeated roots")
        sf = squarefree_part(poly)
        # count with multiplicity is not needed to reject; report root data of the radical
        real = sturm_count(sf)
        positive = sturm_count(sf, 0, None)
        if real < sf.degree:
            reasons.append("not all roots real")
        if positive < real:
            reasons.append("not all real roots positive")
    else:
        real = sturm_count(poly)
        positive = sturm_count(poly, 0, None)
        if real < 4:
            reasons.append(f"only {real} real roots")
        if positive < 4:
            reasons.append(f"only {positive} positive roots")
    return QuarticReport(not reasons, tuple(reasons))


# ---------------------------------------------------------------------------
# explicit presentations

LATTICE_KINDS = ("Z4_by_Z", "Z3_by_Z2", "NilLattice", "N_by_Z")


@dataclass(frozen=True)
class LatticePresentation:
    kind: str
    holonomy: tuple
    note: str = ""

    def __post_init__(self):
        if self.kind not in LATTICE_KINDS:
            raise LatticeError(f"unknown lattice kind {self.kind!r}")
        for m in self.holonomy:
            _check_integer_unimodular(m)
        if self.kind == "Z3_by_Z2":
            if len(self.holonomy) != 2:
                raise LatticeError("Z3_by_Z2 needs two holonomy matrices")
            a, b = self.holonomy
            if not a.commutator(b).is_zero():
                raise HolonomiesDoNotCommute("holonomy matrices do not commute")

    def to_json(self) -> dict:
        from .jsonio import matrix_to_json

        return {"kind": self.kind, "holonomy": [matrix_to_json(m) for m in self.holonomy], "note": self.note}


def _check_integer_unimodular(m: QMat) -> None:
    if not m.is_square:
        raise NotUnimodularMatrix("holonomy must be square")
    if not m.is_integral():
        raise NotIntegral("holonomy has non-integer entries")
    if abs(m.det()) != 1:
        raise NotUnimodularMatrix(f"holonomy has determinant {m.det()}")


def lattice_from_integer_matrix(m: QMat, kind: str | None = None, note: str = "") -> LatticePresentation:
    """Wrap an integer matrix of determinant +-1 as the holonomy of ``Z^n x| Z``."""
    _check_integer_unimodular(m)
    if kind is None:
        kind = "Z4_by_Z" if m.rows == 4 else "N_by_Z"
    return LatticePresentation(kind, (m,), note)


# ---------------------------------------------------------------------------
# cubic fields


class NumberFieldData:
    """A totally real cubic field ``Q[x]/(p)`` with the order ``Z[alpha]``."""

    def __init__(self, defining_poly: Poly, unit_exprs: Sequence[Poly] = ()):
        p = defining_poly
        if p.degree != 3 or p.lc != 1 or any(c.denominator != 1 for c in p.coeffs):
            raise InvalidNumberField("defining polynomial must be a monic integer cubic")
        if _integer_roots(p):
            raise InvalidNumberField(f"{p} has a rational root, so it is reducible")
        if sturm_count(p) != 3:
            raise InvalidNumberField(f"{p} does not have three real roots")
        self.defining_poly = p
        self.unit_exprs = tuple(unit_exprs)

    def reduce(self, u: Poly) -> Poly:
        return u % self.defining_poly

    def mul(self, u: Poly, v: Poly) -> Poly:
        return (u * v) % self.defining_poly

    def inverse(self, u: Poly) -> Poly:
        """Inverse modulo the defining polynomial by the extended Euclidean algorithm."""
        p = self.defining_poly
        r0, r1 = p, u % p
        s0, s1 = Poly(), Poly([1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise NotAUnit("element is a zero divisor")
        return (s0 * (1 / r0.lc)) % p

    def __repr__(self):
        return f"NumberFieldData({self.defining_poly})"


def _integer_roots(p: Poly) -> list[int]:
    c0 = p.coeff(0)
    if c0 == 0:
        return [0]
    n = abs(c0.numerator)
    divs = [d for d in range(1, n + 1) if n % d == 0] if n < 10 ** 6 else []
    return [r for d in divs for r in (d, -d) if p(r) == 0]


def unit_check(nf: NumberFieldData, u: Poly) -> bool:
    """``u(alpha)`` is a unit of ``Z[alpha]`` iff it has integer coefficients and norm +-1."""
    u = nf.reduce(u)
    if u.is_zero() or any(c.denominator != 1 for c in u.coeffs):
        return False
    return abs(resultant(nf.defining_poly, u)) == 1


def unit_action_matrix(nf: NumberFieldData, u: Poly, power: int = 1) -> QMat:
    """Multiplication by ``u^power`` on ``Z[alpha]`` in the basis (1, alpha, alpha^2)."""
    if not unit_check(nf, u):
        raise NotAUnit(f"{u} is not a unit of Z[alpha]")
    base = nf.reduce(u) if power >= 0 else nf.inverse(u)
    acc = Poly([1])
    for _ in range(abs(power)):
        acc = nf.mul(acc, base)
    cols = []
    for j in range(3):
        img = nf.mul(acc, Poly([0] * j + [1]))
        cols.append([img.coeff(k) for k in range(3)])
    return QMat.from_columns(cols, rows=3)


def eval_interval(p: Poly, iv: Interval) -> Interval:
    """Enclosure of ``p`` over ``iv`` by the centred form ``p(m) + p'(J)(x - m)``."""
    if iv.width == 0:
        return Interval(p(iv.lo))
    m = iv.mid
    dp = p.derivative()
    # Horner enclosure of p' over the interval
    acc = Interval(0)
    for c in reversed(dp.coeffs):
        acc = acc * iv + c
    return Interval(p(m)) + acc * (iv - m)


def root_log_enclosures(poly: Poly, u: Poly, width) -> list[Interval]:
    """Enclosures of ``log|u(r)|`` at the real roots ``r`` of squarefree ``poly``, ascending in r."""
    width = to_rat(width)
    bits = max(8, width.denominator.bit_length() + 6)
    rw = width
    while True:
        roots = real_root_intervals(poly, rw)
        out = []
        ok = True
        for lo, hi in roots:
            val = abs(eval_interval(u, Interval(lo, hi)))
            if val.lo <= 0:
                ok = False
                break
            enc = log_interval(val, bits)
            if enc.width > width:
                ok = False
                break
            out.append(enc)
        if ok:
            return out
        rw /= 16


def log_embedding(nf: NumberFieldData, u: Poly, width=None) -> list[Interval]:
    if not unit_check(nf, u):
        raise NotAUnit(f"{u} is not a unit of Z[alpha]")
    return root_log_enclosures(nf.defining_poly, nf.reduce(u), default_width() if width is None else width)


@dataclass(frozen=True)
class DirichletCertificate:
    presentation: LatticePresentation
    log_vectors: tuple  # two tuples of Intervals
    minor: tuple  # (i, j) coordinates of the certifying minor
    minor_enclosure: Interval
    unit_matrices: tuple  # first powers


def dirichlet_certificate(nf: NumberFieldData, u1: Poly, u2: Poly, width=None) -> DirichletCertificate:
    for u in (u1, u2):
        if not unit_check(nf, u):
            raise NotAUnit(f"{u} is not a unit of Z[alpha]")
    w = default_width() if width is None else to_rat(width)
    l1 = log_embedding(nf, u1, w)
    l2 = log_embedding(nf, u2, w)
    found = None
    for i in range(3):
        for j in range(i + 1, 3):
            det = l1[i] * l2[j] - l1[j] * l2[i]
            if not det.contains_zero():
                found = ((i, j), det)
                break
        if found:
            break
    if found is None:
        raise DependentUnits("no 2x2 minor of the log vectors is certified nonzero")
    h1 = unit_action_matrix(nf, u1, 2)
    h2 = unit_action_matrix(nf, u2, 2)
    pres = LatticePresentation(
        "Z3_by_Z2",
        (h1, h2),
        note=f"Z[alpha] for alpha a root of {nf.defining_poly}, acted on by squares of {u1} and {u2}",
    )
    return DirichletCertificate(pres, (tuple(l1), tuple(l2)), found[0], found[1], (unit_action_matrix(nf, u1), unit_action_matrix(nf, u2)))


def dirichlet_lattice(nf: NumberFieldData, u1: Poly, u2: Poly, width=None) -> LatticePresentation:
    return dirichlet_certificate(nf, u1, u2, width).presentation


# ---------------------------------------------------------------------------
# holonomy against a one-parameter group


@dataclass(frozen=True)
class HolonomyCertificate:
    ok: bool
    scale: Interval | None
    blocks_match: bool
    logs: tuple
    reason: str = ""


def _root_multiset_blocks(m: QMat) -> list[int]:
    """Jordan block sizes over the algebraic closure, one entry per block, sorted."""
    prof = jordan_profile(m)
    sizes = []
    for q, bs in prof.block_sizes().items():
        sizes.extend(list(bs) * q.degree)
    return sorted(sizes)


def certify_holonomy(action: QMat, holonomy: QMat, width=None) -> HolonomyCertificate:
    """Certify that ``holonomy`` is conjugate to ``exp(t * action)`` for some real ``t != 0``.

    Needs real spectra with positive holonomy eigenvalues. The Jordan block
    sizes must agree, and for some ``t`` every ``log`` of a holonomy eigenvalue
    must lie within the enclosure of ``t`` times the matching action
    eigenvalue, both listed in ascending order (or both descending, for t < 0).
    Distinct action eigenvalues must give distinct holonomy eigenvalues.
    """
    w = default_width() if width is None else to_rat(width)
    if action.shape != holonomy.shape:
        return HolonomyCertificate(False, None, False, (), "shape mismatch")
    blocks_ok = _root_multiset_blocks(action) == _root_multiset_blocks(holonomy)
    hsf = squarefree_part(char_poly(holonomy))
    asf = squarefree_part(char_poly(action))
    if hsf.degree != asf.degree:
        return HolonomyCertificate(False, None, blocks_ok, (), "different numbers of distinct eigenvalues")
    if sturm_count(hsf, 0, None) != hsf.degree or sturm_count(asf) != asf.degree:
        return HolonomyCertificate(False, None, blocks_ok, (), "spectra are not real and positive")
    logs = root_log_enclosures(hsf, Poly([0, 1]), w)
    mus = [Interval(lo, hi) for lo, hi in real_root_intervals(asf, w)]
    if all(mu.contains_zero() and mu.width == 0 for mu in mus):
        ok = all(l.contains_zero() for l in logs)
        return HolonomyCertificate(ok and blocks_ok, None, blocks_ok, tuple(logs), "" if ok else "unipotent mismatch")
    # use the eigenvalue of largest modulus to fix t
    k = max(range(len(mus)), key=lambda i: max(abs(mus[i].lo), abs(mus[i].hi)))
    for order in (1, -1):
        ls = logs if order == 1 else list(reversed(logs))
        if mus[k].contains_zero():
            continue
        t = ls[k] / mus[k]
        if all(l.overlaps(t * mu) for l, mu in zip(ls, mus)):
            return HolonomyCertificate(blocks_ok, t, blocks_ok, tuple(logs), "" if blocks_ok else "Jordan blocks differ")
    return HolonomyCertificate(False, None, blocks_ok, tuple(logs), "eigenvalue logs are not proportional")


# ---------------------------------------------------------------------------
# exact arithmetic in Q(sqrt 5)


@dataclass(frozen=True)
class QSqrt5:
    """``a + b sqrt(5)`` with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __add__(self, o):
        o = _q5(o)
        return QSqrt5(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        o = _q5(o)
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        o = _q5(o)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self):
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, o):
        o = _q5(o)
        n = o.norm()
        p = self * o.conj()
        return QSqrt5(p.a / n, p.b / n)

    def is_rational(self) -> bool:
        return self.b == 0

    def enclosure(self, bits: int = 40) -> Interval:
        r5 = sqrt_interval(Interval(5), bits)
        return Interval(self.a) + r5 * self.b


def _q5(x) -> QSqrt5:
    return x if isinstance(x, QSqrt5) else QSqrt5(to_rat(x))


def lorentz_block_report(width=None) -> dict:
    """Check ``exp(s B) = [[1, 1], [1, 2]]`` for ``B = [[-1, 2], [2, 1]]``.

    Since ``B^2 = 5 I``, ``exp(s B) = cosh(s r) I + (sinh(s r) / r) B`` with
    ``r = sqrt 5``. Choosing ``e^{s r} = (3 + r) / 2`` makes this identity exact
    in Q(sqrt 5). The interval part compares the eigenvalue logs of the
    integer matrix with ``+-s r`` for ``s = log((3 + r) / 2) / r``, and records
    whether the alternative value ``log((3 + r) / 2) / log(r)`` would also fit.
    """
    w = default_width() if width is None else to_rat(width)
    bits = max(24, w.denominator.bit_length() + 8)
    B = QMat([[-1, 2], [2, 1]])
    target = QMat([[1, 1], [1, 2]])
    exact = {}
    exact["B_squared_is_5I"] = (B @ B) == QMat.identity(2).scale(5)
    lam = QSqrt5(Fraction(3, 2), Fraction(1, 2))  # e^{s r}
    lam_inv = lam.conj()  # norm 1 so the conjugate is the inverse
    exact["lambda_is_unit"] = (lam * lam_inv) == QSqrt5(Fraction(1))
    cosh = (lam + lam_inv) * Fraction(1, 2)
    sinh_over_r = ((lam - lam_inv) * Fraction(1, 2)) / QSqrt5(Fraction(0), Fraction(1))
    exact["cosh"] = cosh
    exact["sinh_over_sqrt5"] = sinh_over_r
    exact_ok = cosh.is_rational() and sinh_over_r.is_rational()
    if exact_ok:
        m = QMat.identity(2).scale(cosh.a) + B.scale(sinh_over_r.a)
        exact_ok = m == target
    exact["identity_holds"] = exact_ok

    r5 = sqrt_interval(Interval(5), bits)
    golden_sq = log_interval((Interval(3) + r5) / 2, bits)
    s = golden_sq / r5
    logs = root_log_enclosures(char_poly(target), Poly([0, 1]), w)
    predicted = [-(s * r5), s * r5]
    interval_ok = all(l.overlaps(p) for l, p in zip(logs, predicted)) and all(l.width <= w for l in logs)
    alt_s = golden_sq / log_interval(r5, bits)
    alt_pred = alt_s * r5
    alt_fits = logs[1].overlaps(alt_pred)
    return {
        "exact": exact,
        "exact_ok": exact_ok,
        "s": s,
        "eigen_logs": logs,
        "predicted": predicted,
        "interval_ok": interval_ok,
        "alt_s": alt_s,
        "alt_s_fits": alt_fits,
        "width": w,
    }
