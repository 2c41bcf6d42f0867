"""Derivation algebras, traceless outer classes and characteristic flags."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .liealg import (
    AlgebraSubspace,
    LieAlgebra,
    LieError,
    ad,
    bracket_space,
    center,
    centralizer,
    derived_series,
    is_ideal,
    lower_central_series,
)
from .qlinalg import QMat, Subspace, kernel

__all__ = [
    "DerivationSpace",
    "derivation_algebra",
    "restricted_trace_row",
    "sout_matches_parametrization",
    "bracket_closure_check",
    "ClosureReport",
    "Flag",
    "InvalidFlag",
    "UnknownDescriptor",
    "descriptor_subspace",
    "verify_characteristic_flag",
    "FLAG_SAMPLES",
    "FLAG_SEED",
]

FLAG_SAMPLES = 64
FLAG_SEED = 20240611


class UnknownDescriptor(LieError):
    pass


class InvalidFlag(LieError):
    pass


def _mat(v: Sequence, n: int) -> QMat:
    return QMat.from_flat(v, n, n)


@dataclass(frozen=True)
class DerivationSpace:
    algebra: LieAlgebra
    all: Subspace  # subspace of the n*n matrix entries, row-major
    inner: Subspace
    traceless: Subspace
    sout_representatives: tuple  # of QMat

    @property
    def dim(self) -> int:
        return self.all.dim

    @property
    def sout_dim(self) -> int:
        return len(self.sout_representatives)

    @property
    def out_dim(self) -> int:
        return self.all.dim - self.inner.dim

    def matrices(self) -> list[QMat]:
        n = self.algebra.dim
        return [_mat(v, n) for v in self.all.vectors()]


def _leibniz_rows(g: LieAlgebra) -> list[list[Fraction]]:
    n = g.dim
    rows = []
    for i in range(n):
        for j in range(i):
            bij = g.basis_bracket(i, j)
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                # D[e_i, e_j] component k
                for r in range(n):
                    if bij[r]:
                        row[k * n + r] += bij[r]
                # - [D e_i, e_j] - [e_i, D e_j]
                for r in range(n):
                    c1 = g.basis_bracket(r, j)[k]
                    if c1:
                        row[r * n + i] -= c1
                    c2 = g.basis_bracket(i, r)[k]
                    if c2:
                        row[r * n + j] -= c2
                if any(row):
                    rows.append(row)
    return rows


def _trace_row(n: int) -> list[Fraction]:
    return [Fraction(1 if r == c else 0) for r in range(n) for c in range(n)]


def restricted_trace_row(n: int, s: Subspace) -> list[Fraction]:
    """Linear functional D -> tr(D | s), valid for D preserving ``s``.

    In the echelon basis of ``s`` the coordinate of a vector along basis
    vector k is its entry at pivot k.
    """
    row = [Fraction(0)] * (n * n)
    for v, p in zip(s.vectors(), s.pivots):
        for c, x in enumerate(v):
            if x:
                row[p * n + c] += x
    return row


def derivation_algebra(g: LieAlgebra) -> DerivationSpace:
    n = g.dim
    rows = _leibniz_rows(g)
    if rows:
        der = kernel(QMat(rows, cols=n * n))
    else:
        der = Subspace.full(n * n)
    inner = Subspace.span([m.flatten() for m in g.ad_basis()], n * n)
    traceless = der & kernel(QMat([_trace_row(n)], cols=n * n)) if n else der
    reps = _sout_reps(traceless, inner, n)
    return DerivationSpace(g, der, inner, traceless, reps)


def _sout_reps(traceless: Subspace, inner: Subspace, n: int) -> tuple:
    base = inner & traceless
    reduced = [base.reduce(v) for v in traceless.vectors()]
    space = Subspace.span([v for v in reduced if any(v)], n * n)
    return tuple(_mat(v, n) for v in space.vectors())


def _constrained(ds: DerivationSpace, constraints: Sequence[Subspace]) -> Subspace:
    n = ds.algebra.dim
    space = ds.traceless
    rows = []
    for s in constraints:
        for m in ds.matrices():
            if any(m.apply(v) not in s for v in s.vectors()):
                raise LieError("trace constraint subspace is not preserved by all derivations")
        rows.append(restricted_trace_row(n, s))
    if rows:
        space = space & kernel(QMat(rows, cols=n * n))
    return space


def sout_matches_parametrization(
    g: LieAlgebra,
    pattern: Mapping[str, QMat],
    trace_constraints: Sequence[Subspace] = (),
    ds: DerivationSpace | None = None,
) -> bool:
    """Does ``sum_p p * pattern[p]`` parametrize the (constrained) traceless outer classes?

    ``pattern`` maps each free slot to the matrix it multiplies; fixed
    entries are zero. ``trace_constraints`` are characteristic ideals on
    which the derivation must also act tracelessly. True exactly when every
    pattern matrix is such a derivation, every such derivation is a pattern
    matrix plus an inner derivation, no nonzero pattern matrix is inner, and
    the slot count equals the dimension of the constrained quotient.
    """
    ds = ds or derivation_algebra(g)
    n = g.dim
    allowed = _constrained(ds, trace_constraints)
    inner = ds.inner & allowed
    pvecs = [m.flatten() for m in pattern.values()]
    pspace = Subspace.span(pvecs, n * n)
    if pspace.dim != len(pvecs):
        return False
    if not pspace.issubset(allowed):
        return False
    if not allowed.issubset(pspace + inner):
        return False
    if (pspace & inner).dim != 0:
        return False
    return len(pvecs) == allowed.dim - inner.dim


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    perfect: bool
    dim: int
    killing_rank: int | None


def bracket_closure_check(mats: Sequence[QMat]) -> ClosureReport:
    """Closure and perfectness of the span of ``mats`` under commutators."""
    if not mats:
        return ClosureReport(True, True, 0, 0)
    size = mats[0].rows * mats[0].cols
    span = Subspace.span([m.flatten() for m in mats], size)
    basis = [QMat.from_flat(v, mats[0].rows, mats[0].cols) for v in span.vectors()]
    comms = [a.commutator(b).flatten() for a, b in combinations(basis, 2)]
    cspan = Subspace.span(comms, size)
    closed = cspan.issubset(span)
    perfect = closed and cspan == span
    krank = None
    if closed:
        # ad of each basis element on the span, in echelon coordinates
        ads = []
        for a in basis:
            cols = [span.coordinates(a.commutator(b).flatten()) for b in basis]
            ads.append(QMat.from_columns(cols, rows=len(basis)))
        kill = QMat([[(x @ y).trace() for y in ads] for x in ads])
        krank = kill.rank()
    return ClosureReport(closed, perfect, span.dim, krank)


# ---------------------------------------------------------------------------
# characteristic flags


class Flag:
    """Complete flag: subspaces of dims 1 .. n-1, each inside the next."""

    def __init__(self, algebra: LieAlgebra, subspaces: Sequence[Subspace]):
        subs = [AlgebraSubspace(algebra, s) if not isinstance(s, AlgebraSubspace) else s for s in subspaces]
        n = algebra.dim
        if len(subs) != max(n - 1, 0):
            raise InvalidFlag(f"a complete flag of a {n}-dimensional algebra has {n - 1} terms")
        for k, s in enumerate(subs):
            if s.dim != k + 1:
                raise InvalidFlag(f"flag term {k + 1} has dimension {s.dim}")
            if k and not subs[k - 1].issubset(s):
                raise InvalidFlag(f"flag term {k} is not contained in term {k + 1}")
        self.algebra = algebra
        self.subspaces = tuple(subs)

    @classmethod
    def from_names(cls, algebra: LieAlgebra, terms: Sequence[Sequence[str]]) -> "Flag":
        names = list(algebra.basis_names)
        return cls(algebra, [Subspace.coordinate(algebra.dim, [names.index(x) for x in t]) for t in terms])


def _bracket_into(g: LieAlgebra, s: Subspace) -> Subspace:
    # x with [x, e_i] in s for every i: ad(e_i) x lies in s, i.e. ann(s) . ad(e_i) x = 0
    n = g.dim
    ann = s.annihilator().vectors()
    rows = []
    for m in g.ad_basis():
        for f in ann:
            rows.append([sum(f[r] * m[r, c] for r in range(n)) for c in range(n)])
    if not rows:
        return Subspace.full(n)
    return kernel(QMat(rows, cols=n))


def descriptor_subspace(g: LieAlgebra, desc) -> Subspace:
    """Solve a descriptor that determines a linear subspace.

    Descriptors are tuples: ``("lcs", k)``, ``("derived", k)`` (both
    1-based, term 1 is all of g), ``("center",)``, ``("sum", d1, d2, ...)``,
    ``("centralizer", d)``, ``("bracket_into", d)`` meaning
    ``{x : [x, g] in d}``.
    """
    if not isinstance(desc, tuple) or not desc:
        raise UnknownDescriptor(f"descriptor must be a non-empty tuple, got {desc!r}")
    tag = desc[0]
    n = g.dim
    if tag in ("lcs", "derived"):
        series = lower_central_series(g) if tag == "lcs" else derived_series(g)
        k = desc[1]
        if k < 1:
            raise UnknownDescriptor("series index starts at 1")
        return series[k - 1] if k <= len(series) else series[-1]
    if tag == "center":
        return center(g)
    if tag == "sum":
        total = Subspace.zero(n)
        for d in desc[1:]:
            total = total + descriptor_subspace(g, d)
        return total
    if tag == "centralizer":
        return centralizer(g, descriptor_subspace(g, desc[1]))
    if tag == "bracket_into":
        return _bracket_into(g, descriptor_subspace(g, desc[1]))
    raise UnknownDescriptor(f"unknown descriptor {tag!r}")


def _random_vector(rng: random.Random, n: int) -> tuple:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n))


def _verify_rank_bound(g: LieAlgebra, s: Subspace, k: int, ds: DerivationSpace) -> bool:
    def rank(x):
        return ad(g, x).rank()

    if any(rank(v) > k for v in s.vectors()):
        return False
    if any(m.apply(v) not in s for m in ds.matrices() for v in s.vectors()):
        return False
    rng = random.Random(FLAG_SEED)
    inside = 0
    while inside < FLAG_SAMPLES:
        coeffs = _random_vector(rng, s.dim)
        v = tuple(sum((c * b[i] for c, b in zip(coeffs, s.vectors())), Fraction(0)) for i in range(g.dim))
        if rank(v) > k:
            return False
        inside += 1
    outside = 0
    while outside < FLAG_SAMPLES:
        v = _random_vector(rng, g.dim)
        if v in s:
            continue
        if rank(v) <= k:
            return False
        outside += 1
    return True


def verify_characteristic_flag(g: LieAlgebra, flag: Flag, descriptors: Sequence) -> bool:
    """Check each flag term against its descriptor and that all terms are characteristic.

    Besides the linear descriptors of :func:`descriptor_subspace`,
    ``("bracket_rank_le", k)`` stands for ``{x : dim [x, g] <= k}``, which is
    not linear in general and is only verified: the spanning vectors and
    random members satisfy the bound, all derivations preserve the term,
    and random vectors outside the term violate the bound.
    """
    if len(descriptors) != len(flag.subspaces):
        raise InvalidFlag("need one descriptor per flag term")
    ds = derivation_algebra(g)
    mats = ds.matrices()
    for term, desc in zip(flag.subspaces, descriptors):
        if isinstance(desc, tuple) and desc and desc[0] == "bracket_rank_le":
            if not _verify_rank_bound(g, term, desc[1], ds):
                return False
        elif descriptor_subspace(g, desc) != term.space:
            return False
        if not is_ideal(g, term):
            return False
        if any(m.apply(v) not in term for m in mats for v in term.vectors()):
            return False
    return True
