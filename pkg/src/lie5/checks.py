"""Replayable checks of the classification results.

Each check is a pure function returning ``(passed, detail)``. Checks are
grouped; ``run_checks(only=...)`` accepts group names or check ids. The
deterministic sample generators used here are public so the test-suite can
reuse them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .catalog import (
    DIAGONAL,
    TRACE_LABELS,
    emit,
    fingerprint,
    get_record,
    identify,
    list_geometries,
    verify_certificate,
)
from .cohomology import Cocycle2, boundary, coboundary_of, cohomology_dim, extension_from_cocycle, wedge_basis
from .derivations import Flag, bracket_closure_check, derivation_algebra, sout_matches_parametrization, verify_characteristic_flag
from .intervals import Interval
from .lattices import (
    IntQuartic,
    NumberFieldData,
    admissible_quartic,
    dirichlet_certificate,
    lattice_from_integer_matrix,
    lorentz_block_report,
    unit_action_matrix,
    unit_check,
    log_embedding,
)
from .liealg import (
    LieAlgebra,
    Representation,
    abelian,
    bracket_space,
    change_basis,
    r2_standard,
    semidirect_sum,
    validate,
)
from .qlinalg import Poly, QMat, Subspace, char_poly, exp_nilpotent, format_rat, kernel
from .structure import check_nilradical, nilradical

__all__ = [
    "CheckResult",
    "CHECKS",
    "GROUPS",
    "run_checks",
    "random_basis_change",
    "diagonal_param_triples",
    "random_complexes",
    "random_solvable_algebras",
    "n3",
    "n4",
    "rn3",
    "SEED",
]

SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    id: str
    group: str
    title: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "group": self.group, "title": self.title, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class _Check:
    id: str
    group: str
    title: str
    fn: Callable[[], tuple]


CHECKS: list[_Check] = []


def _check(cid: str, title: str):
    def deco(fn):
        CHECKS.append(_Check(cid, cid.split(".")[0], title, fn))
        return fn
    return deco


# ---------------------------------------------------------------------------
# small algebras and samplers


def n3() -> LieAlgebra:
    return LieAlgebra.from_brackets("n3", ["x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


def n4() -> LieAlgebra:
    return LieAlgebra.from_brackets("n4", ["x1", "x2", "x3", "x4"], {("x4", "x3"): {"x2": 1}, ("x4", "x2"): {"x1": 1}})


def rn3() -> LieAlgebra:
    return LieAlgebra.from_brackets("R⊕n3", ["y", "x1", "x2", "x3"], {("x3", "x2"): {"x1": 1}})


def random_basis_change(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> QMat:
    while True:
        m = QMat([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m


def diagonal_param_triples(count: int = 25, seed: int = SEED) -> list[tuple]:
    """Rational (a, b, c) with a, b, c, -a-b-c pairwise distinct."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
        vals = t + (-sum(t),)
        if len(set(vals)) == 4 and t not in out:
            out.append(t)
    return out


_SMALL = (
    lambda: abelian(1),
    lambda: abelian(2),
    lambda: LieAlgebra.from_brackets("r2", ["x1", "x2"], {("x2", "x1"): {"x1": 1}}),
    lambda: abelian(3),
    n3,
    lambda: LieAlgebra.from_brackets("sl2", ["h", "e", "f"], {("e", "h"): {"e": -2}, ("f", "h"): {"f": 2}, ("f", "e"): {"h": -1}}),
    lambda: LieAlgebra.from_brackets("so3", ["a", "b", "c"], {("b", "a"): {"c": 1}, ("c", "b"): {"a": 1}, ("c", "a"): {"b": -1}}),
    lambda: LieAlgebra.from_brackets("r3", ["x1", "x2", "x3"], {("x3", "x1"): {"x1": 1}, ("x3", "x2"): {"x2": 1}}),
    rn3,
    n4,
    lambda: abelian(4),
    lambda: LieAlgebra.from_brackets("r2+r2", ["a", "b", "c", "d"], {("b", "a"): {"a": 1}, ("d", "c"): {"c": 1}}),
)


def _commuting_family(rng: random.Random, m: int, count: int) -> list[QMat]:
    base = QMat([[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)])
    powers = [QMat.identity(m), base, base @ base]
    out = []
    for _ in range(count):
        coeffs = [rng.randint(-2, 2) for _ in powers]
        acc = QMat.zeros(m, m)
        for c, p in zip(coeffs, powers):
            acc = acc + p.scale(c)
        out.append(acc)
    return out


def random_complexes(count: int = 50, seed: int = SEED) -> list[Representation]:
    """Algebras of dim <= 4 with modules of dim <= 3 (action through g / [g, g] or adjoint)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.choice(_SMALL)()
        g = change_basis(g, random_basis_change(rng, g.dim, -1, 1))
        kind = rng.randrange(3)
        if kind == 0 and g.dim <= 3:
            out.append(Representation.adjoint(g))
            continue
        m = rng.randint(1, 3)
        if kind == 1:
            out.append(Representation.trivial(g, m))
            continue
        full = Subspace.full(g.dim)
        chars = bracket_space(g, full, full).annihilator().vectors()
        fam = _commuting_family(rng, m, len(chars))
        mats = []
        for i in range(g.dim):
            acc = QMat.zeros(m, m)
            for f, a in zip(chars, fam):
                acc = acc + a.scale(f[i])
            mats.append(acc)
        out.append(Representation(g, mats, m))
    return out


def random_solvable_algebras(count: int = 200, seed: int = SEED) -> list[LieAlgebra]:
    """Five-dimensional solvable algebras from semidirect sums, in random bases.

    Half of the actions are traceless, so roughly half of the samples are
    unimodular.
    """
    rng = random.Random(seed)
    out = []
    nilpotent_bases = (lambda: abelian(4), rn3, n4)
    while len(out) < count:
        traceless = rng.random() < 0.5
        shape = rng.randrange(3)
        if shape == 0:
            k = rng.choice((3, 4))
            fam = _commuting_family(rng, k, 5 - k)
            if traceless:
                fam = [a - QMat.identity(k).scale(Fraction(a.trace(), k)) for a in fam]
            g = semidirect_sum(abelian(k), 5 - k, fam)
        else:
            n = rng.choice(nilpotent_bases)()
            ds = derivation_algebra(n)
            basis = ds.matrices()
            d = QMat.zeros(4, 4)
            for b in basis:
                d = d + b.scale(rng.randint(-2, 2))
            if traceless and d.trace() != 0:
                # subtract a multiple of a derivation with nonzero trace
                tb = next(b for b in basis if b.trace() != 0)
                d = d - tb.scale(d.trace() / tb.trace())
            g = semidirect_sum(n, 1, [d])
        out.append(change_basis(g, random_basis_change(rng, 5)))
    return out


# ---------------------------------------------------------------------------
# catalog


for _name in (
    "R3⋊{xyz=1}^0", "R4⋊R[x^4]", "Nil4×E", "Nil4⋊R(3→1)", "Nil4⋊R(4→3→1)", DIAGONAL,
    "R4⋊R[x^2,x-1,x+1]", "R4⋊R[(x-1)^2,(x+1)^2]", "Heis-Lorentz", "Sol41×E",
):
    def _catalog(name=_name):
        rec = get_record(name)
        g = rec.emit()
        fp = fingerprint(g)
        want_nil = name in ("R4⋊R[x^4]", "Nil4×E", "Nil4⋊R(3→1)", "Nil4⋊R(4→3→1)")
        problems = []
        if validate(g) is not None:
            problems.append("Jacobi")
        if not fp.unimodular:
            problems.append("unimodular")
        if not fp.solvable:
            problems.append("solvable")
        if fp.nilpotent != want_nil:
            problems.append("nilpotency")
        problems += [f"expected {k}" for k in rec.expected_matches(fp)]
        problems += [f"certificate {k}" for k, v in verify_certificate(rec).items() if not v]
        return not problems, ", ".join(problems) or f"{rec.patera_name}; certificate {rec.certificate.__class__.__name__}"

    _check(f"catalog.{_name}", f"{_name} is valid, unimodular, solvable and matches its expected invariants")(_catalog)


# ---------------------------------------------------------------------------
# identification key

for _rec in list_geometries():
    def _fig1(rec=_rec):
        res = identify(rec.emit())
        ok = res.name == rec.name and res.trace == rec.leaf
        return ok, " → ".join(res.trace) + f" ⇒ {res.name or res.reason}"

    _check(f"key.{_rec.name}", f"identify(emit({_rec.name})) follows its branch of the key")(_fig1)


def _proportional(u: list, v: list) -> bool:
    """Is the multiset ``v`` a nonzero multiple of the multiset ``u``?"""
    v = sorted(v)
    pivot = next(x for x in v if x)
    for y in u:
        if y and sorted(pivot / y * x for x in u) == v:
            return True
    return False


@_check("key.diagonal-family", "25 diagonal-family parameter triples identify with scale-equivalent parameters")
def _fig1_family():
    bad = []
    for t in diagonal_param_triples():
        res = identify(emit(DIAGONAL, a=t[0], b=t[1], c=t[2]))
        if res.name != DIAGONAL:
            bad.append(f"{t}: {res.reason}")
            continue
        p = res.params
        new = [p["a"], p["b"], p["c"], -p["a"] - p["b"] - p["c"]]
        old = list(t) + [-sum(t)]
        again = identify(emit(DIAGONAL, **p)).params
        if not _proportional(old, new) or again != p:
            bad.append(str(t))
    return not bad, "; ".join(bad) or "25 triples"


@_check("key.labels", "branch labels are the reference ones")
def _fig1_labels():
    want = {"ℝ³", "ℝ⁴", "ℝ ⊕ 𝔫₃", "2 Jordan blocks", "3 Jordan blocks", "4 Jordan blocks", "1-D center", "2-D center", "𝔤⁴ ≠ 0", "𝔤⁴ = 0"}
    seen = " ".join(x for r in list_geometries() for x in r.leaf)
    missing = [w for w in want if w not in seen]
    return not missing, ", ".join(missing) or f"{len(TRACE_LABELS)} labels"


@_check("key.abelian", "abelian R^5 is rejected as AbelianInput")
def _fig1_abelian():
    res = identify(abelian(5))
    return res.reason == "AbelianInput", str(res.reason)


@_check("key.repeated-eigenvalues", "R^4 x| R with semisimple eigenvalues 1, 1, -1, -1 is not in the catalog")
def _fig1_repeated():
    g = semidirect_sum(abelian(4), 1, [QMat.diag([1, 1, -1, -1])])
    res = identify(g)
    return res.name is None, str(res.reason)


# ---------------------------------------------------------------------------
# distinctness


@_check("distinct.expected", "expected fingerprints are pairwise distinguishable")
def _distinct_expected():
    recs = list_geometries()
    bad = []
    for i, a in enumerate(recs):
        for b in recs[i + 1:]:
            shared = set(a.expected) & set(b.expected)
            if all(a.expected[k] == b.expected[k] for k in shared):
                bad.append(f"{a.name} / {b.name}")
    return not bad, "; ".join(bad) or "45 pairs"


@_check("distinct.computed", "computed fingerprints at default parameters are pairwise unequal")
def _distinct_computed():
    fps = [fingerprint(r.emit()) for r in list_geometries()]
    n = len(set(fps))
    return n == len(fps), f"{n} distinct of {len(fps)}"


@_check("distinct.basis-change", "identify is unchanged under 20 random integer basis changes per entry")
def _distinct_basis():
    rng = random.Random(SEED)
    bad = []
    for r in list_geometries():
        g = r.emit()
        for _ in range(20):
            h = change_basis(g, random_basis_change(rng, 5))
            res = identify(h)
            if res.name != r.name:
                bad.append(f"{r.name}: {res.reason}")
                break
    return not bad, "; ".join(bad) or "200 basis changes"


# ---------------------------------------------------------------------------
# H^2 of R^2 with coefficients in the six embeddings

_H2 = (1, 1, 2, 0, 0, 0)

for _k in range(1, 7):
    def _h2(k=_k):
        m1, m2 = r2_standard(k)
        rep = Representation(abelian(2), [m1, m2], 3)
        got = cohomology_dim(abelian(2), rep, 2)
        image = Subspace.span(m1.columns() + m2.columns(), 3)
        return got == _H2[k - 1] == 3 - image.dim, f"dim H^2 = {got}, 3 - rank = {3 - image.dim}"

    _check(f"h2.phi{_k}", f"dim H^2(R^2; φ{_k}) = {_H2[_k - 1]}")(_h2)


# ---------------------------------------------------------------------------
# d d = 0


@_check("dd.random", "d_{p+1} d_p = 0 on 50 pseudo-random complexes")
def _dd():
    bad = 0
    for rep in random_complexes():
        g = rep.algebra
        for p in range(g.dim - 1):
            dd = boundary(g, rep, p + 1) @ boundary(g, rep, p)
            if not dd.is_zero():
                bad += 1
    return bad == 0, f"{bad} nonzero compositions"


# ---------------------------------------------------------------------------
# derivations


@_check("sout.n3", "sout(n3) has dimension 3 and is a perfect Lie algebra")
def _sout_n3():
    ds = derivation_algebra(n3())
    rep = bracket_closure_check(ds.sout_representatives)
    ok = ds.sout_dim == 3 and rep.closed and rep.perfect
    return ok, f"dim {ds.sout_dim}, closed {rep.closed}, perfect {rep.perfect}"


def _E(n, i, j):
    return QMat.unit(n, i, j)


@_check("sout.n4", "sout(n4) is parametrized by diag(2a,-a,-4a,3a) + b E13 + c E34")
def _sout_n4():
    pattern = {"a": QMat.diag([2, -1, -4, 3]), "b": _E(4, 0, 2), "c": _E(4, 2, 3)}
    ok = sout_matches_parametrization(n4(), pattern)
    return ok, f"dim {derivation_algebra(n4()).sout_dim}"


@_check("sout.R+n3", "constrained sout(R⊕n3) matches its six-slot parametrization")
def _sout_rn3():
    g = rn3()
    pattern = {
        "d": _E(4, 1, 0),
        "e": _E(4, 0, 2),
        "f": _E(4, 0, 3),
        "a": _E(4, 2, 2) - _E(4, 3, 3),
        "b": _E(4, 2, 3),
        "c": _E(4, 3, 2),
    }
    cons = [Subspace.coordinate(4, [1]), Subspace.coordinate(4, [0, 1])]
    return sout_matches_parametrization(g, pattern, cons), "slots d, e, f, a, b, c"


# ---------------------------------------------------------------------------
# characteristic flags

_FLAGS = {
    "R4⋊R[x^4]": ([["x1"], ["x1", "x2"], ["x1", "x2", "x3"], ["x1", "x2", "x3", "x4"]],
                  [("lcs", 4), ("lcs", 3), ("lcs", 2), ("bracket_rank_le", 1)]),
    "Nil4×E": ([["x1"], ["x1", "x2"], ["x1", "x2", "x4"], ["x1", "x2", "x3", "x4"]],
               [("lcs", 3), ("lcs", 2), ("sum", ("lcs", 2), ("center",)), ("bracket_rank_le", 1)]),
    "Nil4⋊R(3→1)": ([["x1"], ["x1", "x2"], ["x1", "x2", "x5"], ["x1", "x2", "x3", "x5"]],
                    [("lcs", 3), ("lcs", 2), ("bracket_into", ("lcs", 3)), ("centralizer", ("lcs", 2))]),
    "Nil4⋊R(4→3→1)": ([["x1"], ["x1", "x2"], ["x1", "x2", "x3"], ["x1", "x2", "x3", "x5"]],
                      [("lcs", 4), ("lcs", 3), ("lcs", 2), ("bracket_rank_le", 2)]),
}

for _name, (_terms, _descs) in _FLAGS.items():
    def _flag(name=_name, terms=_terms, descs=_descs):
        g = emit(name)
        ok = verify_characteristic_flag(g, Flag.from_names(g, terms), descs)
        return ok, " ⊂ ".join("⟨" + ",".join(t) + "⟩" for t in terms)

    _check(f"flags.{_name}", f"the reference flag of {_name} consists of characteristic ideals")(_flag)


# ---------------------------------------------------------------------------
# lattices

_A_PRIME = QMat([[2, 1, 2, 1], [1, 1, 1, 1], [0, 0, 2, 1], [0, 0, 1, 1]])
_THREE_BLOCK = QMat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]])


@_check("lattice.exp6J4", "exp(6 J4) is the reference integer matrix")
def _lat_exp():
    j4 = QMat([[1 if c == r + 1 else 0 for c in range(4)] for r in range(4)])
    want = QMat([[1, 6, 18, 36], [0, 1, 6, 18], [0, 0, 1, 6], [0, 0, 0, 1]])
    got = exp_nilpotent(j4.scale(6))
    return got == want, str(got.tolist() == want.tolist())


@_check("lattice.A-prime", "A' is integral unimodular with characteristic polynomial (x^2 - 3x + 1)^2")
def _lat_aprime():
    lattice_from_integer_matrix(_A_PRIME)
    cp = char_poly(_A_PRIME)
    return cp == Poly([1, -3, 1]) ** 2, str(cp)


@_check("lattice.three-block", "the three-block holonomy is integral unimodular")
def _lat_three_block():
    pres = lattice_from_integer_matrix(_THREE_BLOCK)
    return pres.kind == "Z4_by_Z", f"det {_THREE_BLOCK.det()}"


@_check("lattice.quartics", "admissible_quartic accepts x^4-10x^3+23x^2-10x+1 and rejects (x-1)^4 and the 5th cyclotomic")
def _lat_quart():
    yes = admissible_quartic(IntQuartic(-10, 23, -10)).admissible
    no1 = admissible_quartic(IntQuartic(-4, 6, -4)).admissible
    no2 = admissible_quartic(IntQuartic(1, 1, 1)).admissible
    return yes and not no1 and not no2, f"{yes}, {no1}, {no2}"


# ---------------------------------------------------------------------------
# Dirichlet construction

_NF = NumberFieldData(Poly([1, -3, 0, 1]))
_ALPHA = Poly([0, 1])
_ONE_MINUS = Poly([1, -1])


@_check("dirichlet.units", "alpha and 1 - alpha are units of Z[alpha]")
def _dir_units():
    return unit_check(_NF, _ALPHA) and unit_check(_NF, _ONE_MINUS), "norms ±1"


@_check("dirichlet.matrices", "multiplication matrices of alpha and 1 - alpha are the reference ones")
def _dir_mats():
    a = unit_action_matrix(_NF, _ALPHA)
    b = unit_action_matrix(_NF, _ONE_MINUS)
    ok = a == QMat([[0, 0, -1], [1, 0, 3], [0, 1, 0]]) and b == QMat([[1, 0, 1], [-1, 1, -3], [0, -1, 1]])
    return ok, f"{a.tolist()} / {b.tolist()}"


def _match_within(encs: list[Interval], targets: tuple, tol: Fraction) -> bool:
    for perm in permutations(encs):
        if all(max(abs(e.lo - t), abs(e.hi - t)) <= tol for e, t in zip(perm, targets)):
            return True
    return False


@_check("dirichlet.logs", "log embeddings match (0.6, -1, 0.4) and (1, -0.4, -0.6) within 0.07")
def _dir_logs():
    tol = Fraction(7, 100)
    la = log_embedding(_NF, _ALPHA)
    lb = log_embedding(_NF, _ONE_MINUS)
    ta = (Fraction(3, 5), Fraction(-1), Fraction(2, 5))
    tb = (Fraction(1), Fraction(-2, 5), Fraction(-3, 5))
    ok = _match_within(la, ta, tol) and _match_within(lb, tb, tol)
    return ok, " ".join(f"{float(e.mid):.4f}" for e in la + lb)


@_check("dirichlet.lattice", "log vectors are independent and the squared holonomies commute")
def _dir_lattice():
    cert = dirichlet_certificate(_NF, _ALPHA, _ONE_MINUS)
    h1, h2 = cert.presentation.holonomy
    ok = not cert.minor_enclosure.contains_zero() and (h1 @ h2) == (h2 @ h1)
    return ok, f"minor {cert.minor} in [{float(cert.minor_enclosure.lo):.6f}, {float(cert.minor_enclosure.hi):.6f}]"


# ---------------------------------------------------------------------------
# the Heis-Lorentz holonomy


@_check("heis-lattice.matrices", "the holonomy [[1,0,0,0],[d,1,0,0],[0,0,1,1],[0,0,1,2]] is integral unimodular for d = 0, 1")
def _heis_mats():
    for d in (0, 1):
        m = QMat([[1, 0, 0, 0], [d, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2]])
        lattice_from_integer_matrix(m, "N_by_Z")
    return True, "det 1"


@_check("heis-lattice.logs", "eigenvalue logs of [[1,1],[1,2]] are ±s√5 with s = log((3+√5)/2)/√5")
def _heis_logs():
    rep = lorentz_block_report(Fraction(1, 2 ** 16))
    s = rep["s"]
    detail = f"s ∈ [{float(s.lo):.8f}, {float(s.hi):.8f}]"
    if not rep["alt_s_fits"]:
        ps = rep["alt_s"]
        detail += f"; the alternative log((3+√5)/2)/log(√5) ≈ {float(ps.mid):.6f} does not fit"
    return rep["exact_ok"] and rep["interval_ok"], detail


# ---------------------------------------------------------------------------
# extensions


@_check("extension.split", "the zero cocycle for φ6 gives exactly the semidirect sum")
def _ext_split():
    m1, m2 = r2_standard(6)
    rep = Representation(abelian(2), [m1, m2], 3)
    e = extension_from_cocycle(rep, Cocycle2.zero(rep))
    s = semidirect_sum(abelian(3, basis_names=["x1", "x2", "x3"]), 2, [m1, m2])
    return e == s and e.structure == s.structure, e.name


@_check("extension.cohomologous", "cohomologous φ3 cocycles give extensions with equal fingerprints")
def _ext_coh():
    m1, m2 = r2_standard(3)
    rep = Representation(abelian(2), [m1, m2], 3)
    z = kernel(boundary(abelian(2), rep, 2)) if boundary(abelian(2), rep, 2).rows else Subspace.full(3)
    rng = random.Random(SEED)
    bad = 0
    for c_vec in z.vectors():
        c = Cocycle2.from_vector(rep, c_vec)
        b = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        c2 = c + coboundary_of(rep, b)
        if fingerprint(extension_from_cocycle(rep, c)) != fingerprint(extension_from_cocycle(rep, c2)):
            bad += 1
    return bad == 0, f"{z.dim} cocycles, {bad} mismatches"


@_check("extension.nilradical", "every extension of R^2 by φ1..φ4 has nilradical of dimension at least 4")
def _ext_nil():
    rng = random.Random(SEED)
    dims = []
    for k in range(1, 5):
        m1, m2 = r2_standard(k)
        rep = Representation(abelian(2), [m1, m2], 3)
        d2 = boundary(abelian(2), rep, 2)
        z = kernel(d2) if d2.rows else Subspace.full(3)
        for _ in range(4):
            vec = [0] * 3
            for v in z.vectors():
                f = rng.randint(-2, 2)
                vec = [a + f * b for a, b in zip(vec, v)]
            g = extension_from_cocycle(rep, Cocycle2.from_vector(rep, vec))
            dims.append(nilradical(g).dim)
    return min(dims) >= 4, f"dims {sorted(set(dims))}"


# ---------------------------------------------------------------------------
# nilradical certification


@_check("nilradical.catalog", "nilradicals of catalog algebras are certified nilpotent ideals containing [g, g]")
def _nil_cat():
    for r in list_geometries():
        g = r.emit()
        check_nilradical(g, nilradical(g, certify=False))
    return True, "10 algebras"


@_check("nilradical.random", "200 random solvable algebras: certified nilradicals, never of dim 0, 1, 2 when unimodular and non-nilpotent")
def _nil_random():
    bad = []
    count = 0
    for g in random_solvable_algebras():
        fp = fingerprint(g)  # certifies the nilradical on the way
        if fp.unimodular and not fp.nilpotent:
            count += 1
            if fp.nilradical_dim in (0, 1, 2):
                bad.append(g.name)
    return not bad, f"{count} unimodular non-nilpotent samples; {len(bad)} with small nilradical"


GROUPS = tuple(dict.fromkeys(c.group for c in CHECKS))


def select(only: Iterable[str] | None = None) -> list[_Check]:
    if not only:
        return list(CHECKS)
    keys = set(only)
    unknown = [k for k in keys if k not in GROUPS and k not in {c.id for c in CHECKS}]
    if unknown:
        raise KeyError(", ".join(sorted(unknown)))
    return [c for c in CHECKS if c.group in keys or c.id in keys]


def run_checks(only: Iterable[str] | None = None) -> list[CheckResult]:
    out = []
    for c in select(only):
        try:
            ok, detail = c.fn()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(c.id, c.group, c.title, bool(ok), detail))
    return out
