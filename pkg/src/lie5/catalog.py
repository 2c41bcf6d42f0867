"""The catalog of five-dimensional solvable geometries and the identifier.

Each record generates its Lie algebra from exact structure constants and
carries a hand-derived expected fingerprint and a lattice certificate.
:func:`identify` walks the decision key (solvable, nilpotent or not, then
abelian ideals, nilradical type, Jordan blocks, center) and finally
compares the computed fingerprint with the expected one of the leaf.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Mapping

import sympy

from .lattices import (
    IntQuartic,
    LatticePresentation,
    NumberFieldData,
    admissible_quartic,
    certify_holonomy,
    dirichlet_lattice,
    lattice_from_integer_matrix,
)
from .liealg import (
    LieAlgebra,
    LieError,
    abelian,
    bracket_space,
    center,
    centralizer,
    derived_series,
    is_abelian,
    is_unimodular,
    lower_central_series,
    r2_embedding_class,
    restricted_ad,
    semidirect_sum,
    subalgebra,
    validate,
)
from .qlinalg import Poly, QMat, Subspace, char_poly, exp_nilpotent, format_rat, poly_gcd, sturm_count, to_rat
from .structure import (
    UNDECIDED,
    JordanProfile,
    NilpotentClass,
    classify_nilpotent_dim_le4,
    has_4dim_abelian_ideal,
    jordan_profile,
    nilradical,
)

__all__ = [
    "UnknownGeometry",
    "InvalidParams",
    "InvalidAlgebra",
    "PreconditionViolated",
    "Fingerprint",
    "GeometryRecord",
    "Identification",
    "emit",
    "fingerprint",
    "scale_normalize",
    "normalize_action_poly",
    "normalized_diagonal_params",
    "identify",
    "list_geometries",
    "get_record",
    "isotropy_poset",
    "symmetric_spaces",
    "IsotropyRecord",
    "SymmetricSpaceRecord",
    "NAMES",
    "TRACE_LABELS",
    "DIAGONAL",
]


class UnknownGeometry(LieError):
    pass


class InvalidParams(LieError):
    pass


class InvalidAlgebra(LieError):
    pass


class PreconditionViolated(LieError):
    pass


# ---------------------------------------------------------------------------
# scale normalization


def _valuation(x: Fraction, p: int) -> int:
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def scale_normalize(p: Poly) -> tuple[Poly, Fraction]:
    """Canonical member of ``{s^n p(x/s) : s real, result rational}`` and the scale used.

    With ``c_k`` the coefficient of ``x^(n-k)`` and ``g`` the gcd of the
    weights ``k`` of nonzero coefficients, admissible scales are those with
    ``t = s^g`` rational: any nonzero ``t`` when ``g`` is odd, positive ``t``
    when ``g`` is even. Coefficients then scale as ``c_k t^{k/g}``. The
    canonical ``t`` has, for every prime, the least valuation making all
    coefficients integral there, and its sign makes the first coefficient of
    odd reduced weight positive. Returns ``(normalized, s)`` when ``s`` is
    rational, else ``(normalized, t)``.
    """
    if p.is_zero() or p.lc != 1:
        raise PreconditionViolated("scale normalization needs a monic polynomial")
    n = p.degree
    coeffs = {k: p.coeff(n - k) for k in range(1, n + 1) if p.coeff(n - k) != 0}
    if not coeffs:
        return p, Fraction(1)
    g = 0
    for k in coeffs:
        g = gcd(g, k)
    weights = {k: k // g for k in coeffs}
    primes = set()
    for c in coeffs.values():
        primes |= set(sympy.factorint(abs(c.numerator))) | set(sympy.factorint(c.denominator))
    primes.discard(1)
    t = Fraction(1)
    for q in sorted(primes):
        v = max(_ceil_div(-_valuation(c, q), weights[k]) for k, c in coeffs.items())
        t *= Fraction(q) ** v
    if g % 2 == 1:
        odd = [k for k in sorted(coeffs) if weights[k] % 2 == 1]
        if odd and coeffs[odd[0]] * t ** weights[odd[0]] < 0:
            t = -t
    out = [Fraction(0)] * (n + 1)
    out[n] = Fraction(1)
    for k, c in coeffs.items():
        out[n - k] = c * t ** weights[k]
    return Poly(out), t if g == 1 else t


def normalize_action_poly(p: Poly) -> Poly:
    """Scale-canonical form of a traceless monic quartic with four distinct real roots."""
    if p.degree != 4 or p.lc != 1:
        raise PreconditionViolated("expected a monic quartic")
    if p.coeff(3) != 0:
        raise PreconditionViolated("expected zero x^3 coefficient (traceless action)")
    if poly_gcd(p, p.derivative()).degree > 0:
        raise PreconditionViolated("expected a squarefree polynomial")
    if sturm_count(p) != 4:
        raise PreconditionViolated("expected four real roots")
    return scale_normalize(p)[0]


def _rational_roots(p: Poly) -> list[Fraction]:
    x = sympy.Symbol("x")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x)
    roots = []
    for r, mult in sympy.roots(expr, filter="Q").items():
        roots.extend([Fraction(int(sympy.fraction(r)[0]), int(sympy.fraction(r)[1]))] * mult)
    return sorted(roots)


def normalized_diagonal_params(p: Poly) -> tuple | None:
    """First three of the ascending rational roots of the normalized polynomial."""
    roots = _rational_roots(normalize_action_poly(p))
    if len(roots) != 4:
        return None
    return tuple(roots[:3])


# ---------------------------------------------------------------------------
# fingerprints

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _root_blocks(prof: JordanProfile) -> tuple:
    sizes = []
    for q, bs in prof.block_sizes().items():
        sizes.extend(list(bs) * q.degree)
    return tuple(sorted(sizes, reverse=True))


@dataclass(frozen=True)
class Fingerprint:
    solvable: bool
    unimodular: bool
    nilpotent: bool
    lcs_dims: tuple
    derived_dims: tuple
    center_dim: int
    nilradical_dim: int | None
    nilradical_class: NilpotentClass | None
    centralizer_of_derived: tuple  # (dim, abelian)
    action_signature: tuple | None = None
    base_action_class: str | None = None
    normalized_action_poly: Poly | None = None
    has_4dim_abelian_ideal: str | None = None
    action_profile: JordanProfile | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        sig = None
        if self.action_signature is not None:
            poly, blocks, semisimple, all_real, distinct, root_blocks = self.action_signature
            sig = {
                "normalized_char_poly": str(poly),
                "block_count": blocks,
                "semisimple": semisimple,
                "all_real": all_real,
                "distinct_real_count": distinct,
                "block_sizes": list(root_blocks) if root_blocks is not None else None,
            }
        return {
            "solvable": self.solvable,
            "unimodular": self.unimodular,
            "nilpotent": self.nilpotent,
            "lcs_dims": list(self.lcs_dims),
            "derived_dims": list(self.derived_dims),
            "center_dim": self.center_dim,
            "nilradical_dim": self.nilradical_dim,
            "nilradical_class": self.nilradical_class.to_json() if self.nilradical_class else None,
            "centralizer_of_derived": {"dim": self.centralizer_of_derived[0], "abelian": self.centralizer_of_derived[1]},
            "action_signature": sig,
            "base_action_class": self.base_action_class,
            "normalized_action_poly": str(self.normalized_action_poly) if self.normalized_action_poly is not None else None,
            "has_4dim_abelian_ideal": self.has_4dim_abelian_ideal,
        }

    @property
    def block_count(self) -> int | None:
        return self.action_signature[1] if self.action_signature else None


_FP_CACHE: dict = {}
_FP_CACHE_SIZE = 4096


def fingerprint(g: LieAlgebra) -> Fingerprint:
    """Isomorphism invariants of ``g``; memoized on the structure constants."""
    key = (g.basis_names, tuple(sorted(g.structure.items())))
    hit = _FP_CACHE.get(key)
    if hit is None:
        hit = _fingerprint(g)
        if len(_FP_CACHE) >= _FP_CACHE_SIZE:
            _FP_CACHE.clear()
        _FP_CACHE[key] = hit
    return hit


def _fingerprint(g: LieAlgebra) -> Fingerprint:
    fail = validate(g)
    if fail is not None:
        raise InvalidAlgebra(f"Jacobi identity fails for basis triple {fail.triple}")
    lcs = lower_central_series(g)
    der = derived_series(g)
    solvable = der[-1].dim == 0
    nilpotent = lcs[-1].dim == 0
    full = Subspace.full(g.dim)
    d = bracket_space(g, full, full)
    cd = centralizer(g, d)
    fp = dict(
        solvable=solvable,
        unimodular=is_unimodular(g),
        nilpotent=nilpotent,
        lcs_dims=tuple(s.dim for s in lcs),
        derived_dims=tuple(s.dim for s in der),
        center_dim=center(g).dim,
        nilradical_dim=None,
        nilradical_class=None,
        centralizer_of_derived=(cd.dim, is_abelian(g, cd)),
    )
    if not solvable:
        return Fingerprint(**fp)
    nil = nilradical(g)
    fp["nilradical_dim"] = nil.dim
    if nil.dim <= 4 and nil.dim > 0:
        fp["nilradical_class"] = classify_nilpotent_dim_le4(subalgebra(g, nil))
    elif nil.dim == g.dim:
        fp["nilradical_class"] = NilpotentClass("other", nil.dim)
    if nilpotent:
        if g.dim == 5:
            fp["has_4dim_abelian_ideal"] = has_4dim_abelian_ideal(g)
        return Fingerprint(**fp)
    comp = nil.complement_basis()
    nil_abelian = is_abelian(g, nil)
    if len(comp) == 1:
        a = restricted_ad(g, nil, comp[0])
        prof = jordan_profile(a)
        cp = prof.action_char_poly
        norm = scale_normalize(cp)[0]
        if nil_abelian:
            sig = (norm, prof.block_count, prof.semisimple, prof.all_real, prof.distinct_real_count, _root_blocks(prof))
        else:
            # for a nonabelian nilradical only the characteristic polynomial
            # is independent of the chosen complement
            sig = (norm, None, None, prof.all_real, prof.distinct_real_count, None)
        fp["action_signature"] = sig
        fp["action_profile"] = prof
        if nil_abelian and nil.dim == 4 and prof.semisimple and prof.distinct_real_count == 4 and cp.coeff(3) == 0:
            fp["normalized_action_poly"] = normalize_action_poly(cp)
    elif len(comp) == 2 and nil.dim == 3 and nil_abelian:
        m1 = restricted_ad(g, nil, comp[0])
        m2 = restricted_ad(g, nil, comp[1])
        fp["base_action_class"] = r2_embedding_class(m1, m2)
    return Fingerprint(**fp)


# ---------------------------------------------------------------------------
# records


def _r(x) -> Fraction:
    return to_rat(x)


def _shift(n: int) -> QMat:
    return QMat([[1 if c == r + 1 else 0 for c in range(n)] for r in range(n)])


def _r4(names=("x1", "x2", "x3", "x4")) -> LieAlgebra:
    return abelian(4, "R4", list(names))


def _gen_r3_r2(params):
    return semidirect_sum(
        abelian(3, "R3", ["x1", "x2", "x3"]),
        2,
        [QMat.diag([1, 0, -1]), QMat.diag([0, 1, -1])],
        name="R3⋊{xyz=1}^0",
    )


def _gen_x4(params):
    return semidirect_sum(_r4(), 1, [_shift(4)], name="R4⋊R[x^4]")


def _gen_nil4e(params):
    a = QMat([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    return semidirect_sum(_r4(), 1, [a], name="Nil4×E")


_NIL4_BRACKETS = {("x4", "x3"): {"x2": 1}, ("x4", "x2"): {"x1": 1}, ("x5", "x3"): {"x1": 1}}


def _gen_31(params):
    return LieAlgebra.from_brackets("Nil4⋊R(3→1)", ["x1", "x2", "x3", "x4", "x5"], dict(_NIL4_BRACKETS))


def _gen_431(params):
    br = dict(_NIL4_BRACKETS)
    br[("x5", "x4")] = {"x3": 1}
    return LieAlgebra.from_brackets("Nil4⋊R(4→3→1)", ["x1", "x2", "x3", "x4", "x5"], br)


def _diag_params(params) -> tuple:
    try:
        a, b, c = (_r(params[k]) for k in ("a", "b", "c"))
    except KeyError as exc:
        raise InvalidParams(f"missing parameter {exc.args[0]}") from None
    except (TypeError, ValueError) as exc:
        raise InvalidParams(str(exc)) from None
    vals = (a, b, c, -a - b - c)
    if len(set(vals)) != 4:
        raise InvalidParams("a, b, c and -a-b-c must be pairwise distinct")
    return vals


def _gen_diag(params):
    vals = _diag_params(params)
    return semidirect_sum(_r4(), 1, [QMat.diag(vals)], name="R4⋊R[diag]")


def _gen_x2(params):
    a = QMat([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
    return semidirect_sum(_r4(), 1, [a], name="R4⋊R[x^2,x-1,x+1]")


def _gen_sq(params):
    a = QMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]])
    return semidirect_sum(_r4(), 1, [a], name="R4⋊R[(x-1)^2,(x+1)^2]")


def _heis_action(d) -> QMat:
    # on (y, x1, x2, x3): y -> d x1, x2 -> x2, x3 -> -x3
    return QMat([[0, 0, 0, 0], [d, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])


def _rn3() -> LieAlgebra:
    return LieAlgebra.from_brackets("R⊕n3", ["y", "x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


def _gen_heis(params):
    d = _r(params.get("d", 1))
    if d == 0:
        raise InvalidParams("d must be nonzero; d = 0 gives Sol41×E")
    return semidirect_sum(_rn3(), 1, [_heis_action(d)], name="Heis-Lorentz")


def _gen_sol(params):
    return semidirect_sum(_rn3(), 1, [_heis_action(0)], name="Sol41×E")


def _heis_holonomy(d: int) -> QMat:
    return QMat([[1, 0, 0, 0], [d, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2]])


@dataclass(frozen=True)
class GeometryRecord:
    name: str
    patera_name: str
    generator: Callable
    default_params: Mapping
    param_names: tuple
    expected: Mapping  # field name -> expected value (hand-derived)
    leaf: tuple  # branch labels leading to this leaf
    certificate: object
    certificate_note: str = ""
    certificate_params: Mapping | None = None
    action: QMat | None = None  # the action matrix the holonomy should realize

    def emit(self, **params) -> LieAlgebra:
        merged = dict(self.default_params)
        unknown = set(params) - set(self.param_names)
        if unknown:
            raise InvalidParams(f"{self.name} takes no parameters {sorted(unknown)}")
        merged.update(params)
        return self.generator(merged)

    @property
    def is_family(self) -> bool:
        return self.name == DIAGONAL

    @property
    def model_condition(self) -> str:
        """Whether the record is certified as a model geometry."""
        if self.is_family:
            return "parameter dependent: certified for parameters scale-equivalent to certificate_params"
        return "certified"

    def expected_matches(self, fp: Fingerprint) -> list[str]:
        """Names of expected fields that the fingerprint contradicts."""
        bad = []
        for key, want in self.expected.items():
            got = _fp_field(fp, key)
            if got != want:
                bad.append(key)
        return bad


def _fp_field(fp: Fingerprint, key: str):
    if key == "nilradical_kind":
        return fp.nilradical_class.kind if fp.nilradical_class else None
    if key == "block_count":
        return fp.action_signature[1] if fp.action_signature else None
    if key == "block_sizes":
        return fp.action_signature[5] if fp.action_signature else None
    if key == "normalized_char_poly":
        return fp.action_signature[0].coeffs if fp.action_signature else None
    if key == "semisimple_distinct_real":
        s = fp.action_signature
        return bool(s and s[2] and s[4] == 4)
    return getattr(fp, key)


DIAGONAL = "R4⋊R[diag]"

TRACE_LABELS = {
    "solvable": "Lie algebra 𝔤 is solvable",
    "nilpotent": "nilpotent",
    "abelian4": "4-D abelian ideal",
    "no_abelian4": "no 4-D abelian ideal",
    "g4_nonzero": "𝔤⁴ ≠ 0",
    "g4_zero": "𝔤⁴ = 0",
    "non_nilpotent": "non-nilpotent",
    "nil_R3": "nilradical ℝ³",
    "nil_R4": "nilradical ℝ⁴",
    "nil_Rn3": "nilradical ℝ ⊕ 𝔫₃",
    "blocks2": "2 Jordan blocks",
    "blocks3": "3 Jordan blocks",
    "blocks4": "4 Jordan blocks",
    "center1": "1-D center",
    "center2": "2-D center",
}
L = TRACE_LABELS


def _coeffs(*c) -> tuple:
    return tuple(Fraction(x) for x in c)


def _build_records() -> tuple:
    nf = NumberFieldData(Poly([1, -3, 0, 1]))
    alpha, one_minus = Poly([0, 1]), Poly([1, -1])
    recs = [
        GeometryRecord(
            "R3⋊{xyz=1}^0", "A^{-1,-1}_{5,33}", _gen_r3_r2, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=False, lcs_dims=(5, 3), derived_dims=(5, 3, 0),
                 center_dim=0, nilradical_dim=3, nilradical_kind="abelian", centralizer_of_derived=(3, True),
                 base_action_class="φ6"),
            (L["solvable"], L["non_nilpotent"], L["nil_R3"]),
            dirichlet_lattice(nf, alpha, one_minus),
            "O_K for K = Q[x]/(x^3 - 3x + 1), acted on by squares of the units alpha and 1 - alpha",
        ),
        GeometryRecord(
            "R4⋊R[x^4]", "A_{5,2}", _gen_x4, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=True, lcs_dims=(5, 3, 2, 1, 0), derived_dims=(5, 3, 0),
                 center_dim=1, nilradical_dim=5, centralizer_of_derived=(4, True), has_4dim_abelian_ideal="yes"),
            (L["solvable"], L["nilpotent"], L["abelian4"], L["g4_nonzero"]),
            LatticePresentation("NilLattice", (exp_nilpotent(_shift(4).scale(6)),),
                                "integral structure constants; Z^4 x| Z with holonomy exp(6 J4)"),
            action=_shift(4),
        ),
        GeometryRecord(
            "Nil4×E", "A_{4,1} ⊕ ℝ", _gen_nil4e, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=True, lcs_dims=(5, 2, 1, 0), derived_dims=(5, 2, 0),
                 center_dim=2, nilradical_dim=5, centralizer_of_derived=(4, True), has_4dim_abelian_ideal="yes"),
            (L["solvable"], L["nilpotent"], L["abelian4"], L["g4_zero"]),
            LatticePresentation("NilLattice", (), "integral structure constants in the basis x1..x4, z"),
        ),
        GeometryRecord(
            "Nil4⋊R(3→1)", "A_{5,5}", _gen_31, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=True, lcs_dims=(5, 2, 1, 0), derived_dims=(5, 2, 0),
                 center_dim=1, nilradical_dim=5, centralizer_of_derived=(4, False), has_4dim_abelian_ideal="no"),
            (L["solvable"], L["nilpotent"], L["no_abelian4"], L["g4_zero"]),
            LatticePresentation("NilLattice", (), "integral structure constants in the basis x1..x5"),
        ),
        GeometryRecord(
            "Nil4⋊R(4→3→1)", "A_{5,6}", _gen_431, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=True, lcs_dims=(5, 3, 2, 1, 0), derived_dims=(5, 3, 0),
                 center_dim=1, nilradical_dim=5, centralizer_of_derived=(3, True), has_4dim_abelian_ideal="no"),
            (L["solvable"], L["nilpotent"], L["no_abelian4"], L["g4_nonzero"]),
            LatticePresentation("NilLattice", (), "integral structure constants in the basis x1..x5"),
        ),
        GeometryRecord(
            DIAGONAL, "A^{a,b,c}_{5,7}", _gen_diag, {"a": Fraction(-2), "b": Fraction(-1), "c": Fraction(1)}, ("a", "b", "c"),
            dict(solvable=True, unimodular=True, nilpotent=False, nilradical_dim=4, nilradical_kind="abelian",
                 block_count=4, semisimple_distinct_real=True),
            (L["solvable"], L["non_nilpotent"], L["nil_R4"], L["blocks4"]),
            IntQuartic(-10, 23, -10),
            "x^4 - 10x^3 + 23x^2 - 10x + 1 = (x^2 - 3x + 1)(x^2 - 7x + 1), realized by eigenvalues proportional to (-2, -1, 1, 2)",
            {"a": Fraction(-2), "b": Fraction(-1), "c": Fraction(1)},
            action=QMat.diag([-2, -1, 1, 2]),
        ),
        GeometryRecord(
            "R4⋊R[x^2,x-1,x+1]", "A^{-1}_{5,8}", _gen_x2, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=False, lcs_dims=(5, 3, 2), derived_dims=(5, 3, 0),
                 center_dim=1, nilradical_dim=4, nilradical_kind="abelian", centralizer_of_derived=(4, True),
                 block_count=3, block_sizes=(2, 1, 1), normalized_char_poly=_coeffs(0, 0, -1, 0, 1)),
            (L["solvable"], L["non_nilpotent"], L["nil_R4"], L["blocks3"]),
            lattice_from_integer_matrix(QMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]), "Z4_by_Z",
                                        "Z^4 x| Z, holonomy a unipotent 2-block plus [[2,1],[1,1]]"),
            action=QMat([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
        ),
        GeometryRecord(
            "R4⋊R[(x-1)^2,(x+1)^2]", "A^{-1}_{5,15}", _gen_sq, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=False, lcs_dims=(5, 4), derived_dims=(5, 4, 0),
                 center_dim=0, nilradical_dim=4, nilradical_kind="abelian", centralizer_of_derived=(4, True),
                 block_count=2, block_sizes=(2, 2), normalized_char_poly=_coeffs(1, 0, -2, 0, 1)),
            (L["solvable"], L["non_nilpotent"], L["nil_R4"], L["blocks2"]),
            lattice_from_integer_matrix(QMat([[2, 1, 2, 1], [1, 1, 1, 1], [0, 0, 2, 1], [0, 0, 1, 1]]), "Z4_by_Z",
                                        "Z^4 x| Z with holonomy A' of characteristic polynomial (x^2 - 3x + 1)^2"),
            action=QMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]),
        ),
        GeometryRecord(
            "Heis-Lorentz", "A^0_{5,20}", _gen_heis, {"d": Fraction(1)}, ("d",),
            dict(solvable=True, unimodular=True, nilpotent=False, lcs_dims=(5, 3), derived_dims=(5, 3, 1, 0),
                 center_dim=1, nilradical_dim=4, nilradical_kind="R+n3", centralizer_of_derived=(2, True),
                 normalized_char_poly=_coeffs(0, 0, -1, 0, 1)),
            (L["solvable"], L["non_nilpotent"], L["nil_Rn3"], L["center1"]),
            lattice_from_integer_matrix(_heis_holonomy(1), "N_by_Z",
                                        "integer points of R x Heis3 with holonomy exp(sA), s = log((3+sqrt5)/2)/sqrt5"),
            action=_heis_action(1),
        ),
        GeometryRecord(
            "Sol41×E", "A_{4,8} ⊕ ℝ", _gen_sol, {}, (),
            dict(solvable=True, unimodular=True, nilpotent=False, lcs_dims=(5, 3), derived_dims=(5, 3, 1, 0),
                 center_dim=2, nilradical_dim=4, nilradical_kind="R+n3", centralizer_of_derived=(2, True),
                 normalized_char_poly=_coeffs(0, 0, -1, 0, 1)),
            (L["solvable"], L["non_nilpotent"], L["nil_Rn3"], L["center2"]),
            lattice_from_integer_matrix(_heis_holonomy(0), "N_by_Z",
                                        "integer points of R x Heis3 with holonomy exp(sA), s = log((3+sqrt5)/2)/sqrt5"),
            action=_heis_action(0),
        ),
    ]
    return tuple(recs)


_RECORDS: tuple | None = None


def list_geometries() -> tuple:
    global _RECORDS
    if _RECORDS is None:
        _RECORDS = _build_records()
    return _RECORDS


NAMES = (
    "R3⋊{xyz=1}^0",
    "R4⋊R[x^4]",
    "Nil4×E",
    "Nil4⋊R(3→1)",
    "Nil4⋊R(4→3→1)",
    DIAGONAL,
    "R4⋊R[x^2,x-1,x+1]",
    "R4⋊R[(x-1)^2,(x+1)^2]",
    "Heis-Lorentz",
    "Sol41×E",
)


def get_record(name: str) -> GeometryRecord:
    for r in list_geometries():
        if r.name == name or r.patera_name == name:
            return r
    raise UnknownGeometry(f"unknown geometry {name!r}")


def emit(name: str, **params) -> LieAlgebra:
    return get_record(name).emit(**params)


# ---------------------------------------------------------------------------
# identification


@dataclass(frozen=True)
class Identification:
    name: str | None
    patera_name: str | None
    params: Mapping | None
    fingerprint: Fingerprint | None
    trace: tuple
    reason: str | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.name is not None

    def to_json(self) -> dict:
        return {
            "status": "match" if self.ok else "NotInCatalog",
            "name": self.name,
            "patera_name": self.patera_name,
            "params": {k: format_rat(v) for k, v in self.params.items()} if self.params else None,
            "reason": self.reason,
            "detail": self.detail,
            "trace": list(self.trace),
            "fingerprint": self.fingerprint.to_json() if self.fingerprint else None,
        }


def _fail(reason, trace, fp=None, detail=""):
    return Identification(None, None, None, fp, tuple(trace), reason, detail)


def identify(g: LieAlgebra) -> Identification:
    if validate(g) is not None:
        raise InvalidAlgebra("input fails the Jacobi identity")
    if g.dim != 5:
        return _fail("WrongDimension", [], detail=f"dimension {g.dim}, expected 5")
    fp = fingerprint(g)
    trace = []
    if not fp.solvable:
        return _fail("NotSolvable", trace, fp)
    trace.append(L["solvable"])
    if not fp.unimodular:
        return _fail("NotUnimodular", trace, fp)
    if g.is_abelian_algebra():
        return _fail("AbelianInput", trace, fp, "the abelian algebra is the Euclidean space, which has isotropy SO(5)")
    leaf = None
    if fp.nilpotent:
        trace.append(L["nilpotent"])
        ans = fp.has_4dim_abelian_ideal
        if ans == UNDECIDED:
            return _fail("UndecidedBranch", trace, fp, "4-D abelian ideal test undecided")
        trace.append(L["abelian4"] if ans == "yes" else L["no_abelian4"])
        g4 = fp.lcs_dims[3] if len(fp.lcs_dims) > 3 else fp.lcs_dims[-1]
        trace.append(L["g4_nonzero"] if g4 else L["g4_zero"])
    else:
        trace.append(L["non_nilpotent"])
        kind = fp.nilradical_class.kind if fp.nilradical_class else None
        if fp.nilradical_dim == 3 and kind == "abelian":
            trace.append(L["nil_R3"])
        elif fp.nilradical_dim == 4 and kind == "abelian":
            trace.append(L["nil_R4"])
            blocks = fp.block_count
            if blocks not in (2, 3, 4):
                return _fail("NoMatchingBranch", trace, fp, f"{blocks} Jordan blocks")
            trace.append(L[f"blocks{blocks}"])
        elif fp.nilradical_dim == 4 and kind == "R+n3":
            trace.append(L["nil_Rn3"])
            if fp.center_dim not in (1, 2):
                return _fail("NoMatchingBranch", trace, fp, f"{fp.center_dim}-D center")
            trace.append(L[f"center{fp.center_dim}"])
        else:
            label = fp.nilradical_class.label if fp.nilradical_class else "?"
            return _fail("NoMatchingBranch", trace, fp, f"nilradical {label} of dimension {fp.nilradical_dim}")
    for rec in list_geometries():
        if rec.leaf == tuple(trace):
            leaf = rec
            break
    if leaf is None:  # pragma: no cover - every complete trace is a leaf
        return _fail("NoMatchingBranch", trace, fp)
    bad = leaf.expected_matches(fp)
    if bad:
        return _fail("FingerprintMismatch", trace, fp, f"closest leaf {leaf.name}; differs in {', '.join(bad)}")
    params = None
    if leaf.is_family:
        roots = normalized_diagonal_params(fp.action_profile.action_char_poly)
        if roots is None:
            return _fail("FingerprintMismatch", trace, fp, "diagonal family needs rational eigenvalue ratios")
        params = dict(zip(("a", "b", "c"), roots))
    elif leaf.name == "Heis-Lorentz":
        params = {"d": Fraction(1)}
    return Identification(leaf.name, leaf.patera_name, params, fp, tuple(trace))


# ---------------------------------------------------------------------------
# certificates


def verify_certificate(rec: GeometryRecord) -> dict:
    """Re-check a record's lattice certificate; returns named boolean checks."""
    out = {}
    g = rec.emit()
    cert = rec.certificate
    if isinstance(cert, IntQuartic):
        out["admissible_quartic"] = admissible_quartic(cert).admissible
        comp = QMat([[0, 0, 0, -1], [1, 0, 0, -cert.c], [0, 1, 0, -cert.b], [0, 0, 1, -cert.a]])
        out["companion_char_poly"] = char_poly(comp) == cert.poly()
        out["holonomy_realizes_action"] = certify_holonomy(rec.action, comp).ok
        return out
    assert isinstance(cert, LatticePresentation)
    if cert.kind == "NilLattice":
        out["integral_structure_constants"] = all(c.denominator == 1 for v in g.structure.values() for c in v)
    if cert.kind == "Z3_by_Z2":
        a, b = cert.holonomy
        out["holonomies_commute"] = a.commutator(b).is_zero()
        out["determinants_one"] = a.det() == 1 and b.det() == 1
    if cert.kind == "N_by_Z":
        m = cert.holonomy[0]
        n = _rn3()
        out["holonomy_is_automorphism"] = all(
            m.apply(n.basis_bracket(i, j)) == n.bracket(m.col(i), m.col(j)) for i in range(4) for j in range(i)
        )
    if rec.action is not None and cert.holonomy:
        out["holonomy_realizes_action"] = certify_holonomy(rec.action, cert.holonomy[0]).ok
    for k, m in enumerate(cert.holonomy):
        out[f"holonomy_{k}_integral_unimodular"] = m.is_integral() and abs(m.det()) == 1
    return out


# ---------------------------------------------------------------------------
# static data


@dataclass(frozen=True)
class IsotropyRecord:
    key: str
    label: str
    parameters: str = ""


@dataclass(frozen=True)
class SymmetricSpaceRecord:
    label: str
    description: str


_ISOTROPY = (
    IsotropyRecord("so5", "SO(5)"),
    IsotropyRecord("so4", "SO(4)"),
    IsotropyRecord("so3xso2", "SO(3) × SO(2)"),
    IsotropyRecord("so3_5", "SO(3)₅"),
    IsotropyRecord("u2", "U(2)"),
    IsotropyRecord("su2", "SU(2)"),
    IsotropyRecord("so3", "SO(3)"),
    IsotropyRecord("t2", "SO(2) × SO(2)"),
    IsotropyRecord("s1_1", "S¹₁"),
    IsotropyRecord("s1_mn", "S¹_{m/n}", "m/n rational"),
    IsotropyRecord("s1_0", "S¹₀ = SO(2)"),
    IsotropyRecord("s1_half", "S¹_{1/2}"),
    IsotropyRecord("triv", "{1}"),
)

_ISOTROPY_EDGES = (
    ("so5", "so4"), ("so4", "u2"), ("u2", "su2"), ("su2", "s1_1"), ("s1_1", "triv"),
    ("so5", "so3xso2"), ("so3xso2", "so3"), ("so3", "s1_0"), ("s1_0", "triv"),
    ("so5", "so3_5"), ("so3_5", "s1_half"), ("s1_half", "triv"),
    ("so4", "so3"),
    ("so3xso2", "t2"), ("t2", "s1_0"),
    ("u2", "t2"), ("t2", "s1_1"),
    ("t2", "s1_mn"), ("s1_mn", "triv"),
    ("t2", "s1_half"),
)


def isotropy_poset() -> dict:
    """Closed connected subgroups of SO(5) and the covering relations (larger, smaller)."""
    return {"groups": _ISOTROPY, "edges": _ISOTROPY_EDGES}


_SYMMETRIC = (
    SymmetricSpaceRecord("E⁵", "Euclidean space"),
    SymmetricSpaceRecord("S⁵", "round sphere"),
    SymmetricSpaceRecord("H⁵", "hyperbolic space"),
    SymmetricSpaceRecord("SL(3,ℝ)/SO(3)", "non-compact irreducible symmetric space"),
    SymmetricSpaceRecord("SU(3)/SO(3)", "compact irreducible symmetric space"),
)


def symmetric_spaces() -> tuple:
    return _SYMMETRIC


def export_catalog() -> dict:
    """All records with default structure constants, fingerprints and certificates."""
    from .jsonio import algebra_to_dict

    out = []
    for rec in list_geometries():
        g = rec.emit()
        cert = rec.certificate
        out.append({
            "name": rec.name,
            "patera_name": rec.patera_name,
            "params": {k: format_rat(v) for k, v in rec.default_params.items()},
            "algebra": algebra_to_dict(g),
            "fingerprint": fingerprint(g).to_json(),
            "key_path": list(rec.leaf),
            "certificate": cert.to_json(),
            "certificate_note": rec.certificate_note,
            "certificate_params": {k: format_rat(v) for k, v in rec.certificate_params.items()} if rec.certificate_params else None,
            "model_condition": rec.model_condition,
        })
    poset = isotropy_poset()
    return {
        "geometries": out,
        "isotropy": {
            "groups": [{"key": r.key, "label": r.label, "parameters": r.parameters} for r in poset["groups"]],
            "edges": [list(e) for e in poset["edges"]],
        },
        "symmetric_spaces": [{"label": s.label, "description": s.description} for s in symmetric_spaces()],
    }
