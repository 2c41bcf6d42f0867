"""Nilradicals, small nilpotent classes, Jordan profiles and abelian hyperplane ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .liealg import (
    AlgebraSubspace,
    LieAlgebra,
    LieError,
    ad,
    bracket_space,
    centralizer,
    derived_series,
    is_abelian,
    is_ideal,
    lower_central_series,
    subalgebra,
)
from .qlinalg import (
    Poly,
    QMat,
    Subspace,
    char_poly,
    kernel,
    min_poly,
    poly_gcd,
    squarefree_part,
    sturm_count,
)

__all__ = [
    "NotSolvable",
    "NotNilpotent",
    "DimTooLarge",
    "WrongDimension",
    "CertificateFailure",
    "NilpotentClass",
    "JordanProfile",
    "nilradical",
    "associative_hull",
    "classify_nilpotent_dim_le4",
    "jordan_profile",
    "rational_factors",
    "has_4dim_abelian_ideal",
    "YES",
    "NO",
    "UNDECIDED",
]

YES, NO, UNDECIDED = "yes", "no", "Undecided"


class NotSolvable(LieError):
    pass


class NotNilpotent(LieError):
    pass


class DimTooLarge(LieError):
    pass


class WrongDimension(LieError):
    pass


class CertificateFailure(AssertionError):
    """Raised if an internally computed object fails its own certificate."""


# ---------------------------------------------------------------------------
# nilradical


def associative_hull(mats: list[QMat]) -> list[QMat]:
    """Basis of the (non-unital) associative algebra generated by ``mats``."""
    if not mats:
        return []
    basis: list[QMat] = []
    echelon: list[tuple[int, list]] = []  # (pivot, row with 1 at pivot)

    def add(m: QMat) -> bool:
        v = list(m.flatten())
        for p, row in echelon:
            f = v[p]
            if f:
                v = [x - f * y if y else x for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        echelon.append((piv, [x * inv for x in v]))
        basis.append(m)
        return True

    frontier = [m for m in mats if add(m)]
    while frontier:
        new = []
        for a in frontier:
            for g in mats:
                p = a @ g
                if add(p):
                    new.append(p)
        frontier = new
    return basis


def nilradical(g: LieAlgebra, certify: bool = True) -> AlgebraSubspace:
    """The set of ad-nilpotent elements of a solvable ``g``.

    Over a field of characteristic zero the nilpotent elements of the
    associative hull of ad(g) form its radical, which is the kernel of the
    trace form restricted to the hull. The conditions ``tr(ad(x) w) = 0`` for
    ``w`` in a basis of the hull are linear in ``x``. In a simultaneous
    triangular form ad([g, g]) is strictly triangular, so only words in ad of
    a complement of [g, g] contribute to the trace form.
    """
    series = derived_series(g)
    if series[-1].dim != 0:
        raise NotSolvable(f"{g.name} is not solvable")
    n = g.dim
    ads = g.ad_basis()
    derived = series[1] if len(series) > 1 else Subspace.zero(n)
    hull = associative_hull([m for m in (ad(g, c) for c in derived.complement_basis()) if not m.is_zero()])
    rows = []
    for w in hull:
        wt = w.T
        # tr(a w) = sum of entrywise products of a and w transposed
        rows.append([sum((x * y for x, y in zip(a.flatten(), wt.flatten()) if x and y), Fraction(0)) for a in ads])
    if rows:
        nil = kernel(QMat(rows, cols=n))
    else:
        nil = Subspace.full(n)
    out = AlgebraSubspace(g, nil)
    if certify:
        check_nilradical(g, out)
    return out


def check_nilradical(g: LieAlgebra, nil: Subspace) -> None:
    """Certificate: a nilpotent ideal containing [g, g]."""
    full = Subspace.full(g.dim)
    if not is_ideal(g, nil):
        raise CertificateFailure("nilradical candidate is not an ideal")
    if not bracket_space(g, full, full).issubset(nil):
        raise CertificateFailure("nilradical candidate does not contain [g, g]")
    for v in nil.vectors():
        if not (ad(g, v) ** g.dim).is_zero():
            raise CertificateFailure("nilradical candidate has a non ad-nilpotent element")
    if nil.dim and lower_central_series(subalgebra(g, nil))[-1].dim != 0:
        raise CertificateFailure("nilradical candidate is not nilpotent")


# ---------------------------------------------------------------------------
# nilpotent algebras of dimension at most 4


_LABELS = {
    "n3": "𝔫₃",
    "R+n3": "ℝ ⊕ 𝔫₃",
    "n4": "𝔫₄",
}
_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class NilpotentClass:
    """``kind`` is one of ``abelian``, ``n3``, ``R+n3``, ``n4``, ``other``."""

    kind: str
    dim: int

    @property
    def label(self) -> str:
        if self.kind == "abelian":
            return "ℝ" + str(self.dim).translate(_SUPERSCRIPT)
        if self.kind == "other":
            return f"other nilpotent (dim {self.dim})"
        return _LABELS[self.kind]

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim": self.dim, "label": self.label}


def classify_nilpotent_dim_le4(n: LieAlgebra) -> NilpotentClass:
    """Decide the isomorphism type from the dimension of ``[n, n]``."""
    if n.dim > 4:
        raise DimTooLarge("classification is implemented for dim <= 4")
    lcs = lower_central_series(n)
    if lcs[-1].dim != 0:
        raise NotNilpotent(f"{n.name} is not nilpotent")
    d2 = lcs[1].dim if len(lcs) > 1 else 0
    if d2 == 0:
        return NilpotentClass("abelian", n.dim)
    if d2 == 1 and n.dim == 3:
        return NilpotentClass("n3", 3)
    if d2 == 1 and n.dim == 4:
        return NilpotentClass("R+n3", 4)
    if d2 == 2 and n.dim == 4:
        return NilpotentClass("n4", 4)
    return NilpotentClass("other", n.dim)  # pragma: no cover - no other types exist


# ---------------------------------------------------------------------------
# Jordan data over Q


def rational_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities, sorted by (degree, coefficients)."""
    if p.degree <= 0:
        return []
    x = sympy.Symbol("x")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x, domain="QQ")
    _, facs = sympy.factor_list(expr)
    out = []
    for f, mult in facs:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(sympy.Poly(f, x).all_coeffs())]
        out.append((Poly(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return out


@dataclass(frozen=True)
class JordanProfile:
    action_char_poly: Poly
    action_min_poly: Poly
    block_count: int
    nullity_sequence: tuple  # ((factor, (dim ker q(A)^k for k = 1..stable)), ...)
    semisimple: bool
    all_real: bool
    distinct_real_count: int

    def block_sizes(self) -> dict:
        """Jordan block sizes per irreducible factor, as a sorted tuple (largest first).

        A block of size s for factor q means a companion-type block of
        dimension s * deg q.
        """
        out = {}
        for q, seq in self.nullity_sequence:
            d = q.degree
            ranks = [0] + [k // d for k in seq]
            # number of blocks of size >= k is ranks[k] - ranks[k-1]
            ge = [ranks[k] - ranks[k - 1] for k in range(1, len(ranks))]
            sizes = []
            for k in range(len(ge)):
                exactly = ge[k] - (ge[k + 1] if k + 1 < len(ge) else 0)
                sizes.extend([k + 1] * exactly)
            out[q] = tuple(sorted(sizes, reverse=True))
        return out

    def signature(self) -> tuple:
        """Hashable summary not depending on the choice of basis."""
        return (
            self.action_char_poly.coeffs,
            self.block_count,
            self.semisimple,
            self.all_real,
            self.distinct_real_count,
            tuple(sorted((q.degree, seq) for q, seq in self.nullity_sequence)),
        )


def jordan_profile(a: QMat) -> JordanProfile:
    cp = char_poly(a)
    mp = min_poly(a)
    n = a.rows
    if n == 0:
        return JordanProfile(cp, mp, 0, (), True, True, 0)
    sf = squarefree_part(cp)
    block_count = n - sf(a).rank()
    seqs = []
    for q, _ in rational_factors(cp):
        qa = q(a)
        seq = []
        power = qa
        while True:
            nul = n - power.rank()
            if seq and seq[-1] == nul:
                break
            seq.append(nul)
            power = power @ qa
        seqs.append((q, tuple(seq)))
    semisimple = poly_gcd(mp, mp.derivative()).degree == 0
    msf = squarefree_part(mp)
    all_real = sturm_count(msf) == msf.degree
    distinct_real = sturm_count(sf)
    return JordanProfile(cp, mp, block_count, tuple(seqs), semisimple, all_real, distinct_real)


# ---------------------------------------------------------------------------
# four-dimensional abelian ideals of five-dimensional nilpotent algebras


def _form_matrix(g: LieAlgebra, reps: list[tuple], functional: tuple) -> QMat:
    return QMat([[sum(f * c for f, c in zip(functional, g.bracket(u, v))) for v in reps] for u in reps])


def has_4dim_abelian_ideal(g: LieAlgebra) -> str:
    """``yes``, ``no`` or ``Undecided`` for a nilpotent 5-dimensional ``g``.

    A 4-dimensional ideal is a hyperplane containing D = [g, g]; if it is
    abelian it also lies in the centralizer C of D.
    """
    if g.dim != 5:
        raise WrongDimension("has_4dim_abelian_ideal needs a 5-dimensional algebra")
    lcs = lower_central_series(g)
    if lcs[-1].dim != 0:
        raise NotNilpotent(f"{g.name} is not nilpotent")
    d = lcs[1] if len(lcs) > 1 else AlgebraSubspace(g, Subspace.zero(5))
    if not is_abelian(g, d):
        return NO
    c = centralizer(g, d)
    if c.dim <= 3:
        return NO
    if c.dim == 4:
        return YES if is_abelian(g, c) and d.issubset(c) else NO
    # D is central; the bracket descends to an alternating D-valued form on g/D
    if d.dim == 0:
        return YES
    reps = d.complement_basis()
    funcs = [tuple(Fraction(1 if k == p else 0) for k in range(5)) for p in d.pivots]
    # functionals on D: coordinates with respect to the echelon basis of D
    forms = [_form_matrix(g, reps, f) for f in funcs]
    if d.dim == 1:
        return YES if forms[0].rank() <= 2 else NO
    if d.dim == 2:
        # on a 3-dim space every 2-form is n . (u x v); an isotropic plane for both
        # forms is one whose normal is orthogonal to n1 and n2, which always exists
        return YES
    return UNDECIDED
