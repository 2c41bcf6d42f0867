"""Lie algebras given by rational structure constants.

Only brackets ``[e_i, e_j]`` with ``i > j`` are stored (0-based internally);
the rest follow by antisymmetry, so antisymmetry cannot be violated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .qlinalg import (
    Poly,
    QMat,
    Subspace,
    char_poly,
    kernel,
    poly_gcd,
    sturm_count,
    squarefree_part,
    to_rat,
)

__all__ = [
    "LieError",
    "JacobiError",
    "JacobiFailure",
    "DimensionMismatch",
    "NotAnIdeal",
    "NotADerivation",
    "ActionsDoNotCommute",
    "NotARepresentation",
    "LieAlgebra",
    "AlgebraSubspace",
    "Representation",
    "validate",
    "ad",
    "bracket_space",
    "derived_series",
    "lower_central_series",
    "center",
    "centralizer",
    "is_ideal",
    "is_subalgebra",
    "is_abelian",
    "is_unimodular",
    "is_solvable",
    "is_nilpotent",
    "trace_on",
    "quotient",
    "direct_sum",
    "semidirect_sum",
    "change_basis",
    "subalgebra",
    "abelian",
    "is_derivation",
    "r2_embedding_class",
    "R2_CLASSES",
    "r2_standard",
    "restricted_ad",
]


class LieError(ValueError):
    pass


@dataclass(frozen=True)
class JacobiFailure:
    """First basis triple (1-based, ascending) whose Jacobiator is nonzero."""

    triple: tuple[int, int, int]


class JacobiError(LieError):
    def __init__(self, failure: JacobiFailure, name: str = ""):
        self.failure = failure
        super().__init__(f"Jacobi identity fails for basis triple {failure.triple}" + (f" in {name}" if name else ""))


class DimensionMismatch(LieError):
    pass


class NotAnIdeal(LieError):
    pass


class NotADerivation(LieError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"action matrix {index} is not a derivation")


class ActionsDoNotCommute(LieError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"action matrices {pair[0]} and {pair[1]} do not commute")


class NotARepresentation(LieError):
    pass


def _zero(n: int) -> tuple:
    return (Fraction(0),) * n


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q on a named basis.

    ``structure`` maps 0-based pairs ``(i, j)`` with ``i > j`` to either a
    mapping ``{k: c}`` or a sequence of ``(k, c)`` pairs meaning
    ``[e_i, e_j] = sum c e_k``.
    """

    def __init__(self, name: str, basis_names: Sequence[str], structure: Mapping | None = None, check: bool = True):
        self.name = name
        self.basis_names = tuple(str(b) for b in basis_names)
        if len(set(self.basis_names)) != len(self.basis_names):
            raise LieError("basis labels must be distinct")
        n = self.dim = len(self.basis_names)
        table: dict[tuple[int, int], tuple] = {}
        for key, terms in (structure or {}).items():
            i, j = key
            if not (0 <= j < i < n):
                raise LieError(f"bracket index pair {(i, j)} must satisfy dim > i > j >= 0")
            items = terms.items() if isinstance(terms, Mapping) else terms
            vec = [Fraction(0)] * n
            for k, c in items:
                if not 0 <= k < n:
                    raise LieError(f"term index {k} out of range")
                vec[k] += to_rat(c)
            if any(vec):
                table[(i, j)] = tuple(vec)
        self._table = table
        # dense bracket table of basis vectors, both orders
        z = _zero(n)
        br = [[z] * n for _ in range(n)]
        for (i, j), v in table.items():
            br[i][j] = v
            br[j][i] = tuple(-x for x in v)
        self._br = br
        self._ad_basis = None
        self._series_cache: dict = {}
        if check:
            fail = validate(self)
            if fail is not None:
                raise JacobiError(fail, name)

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_brackets(cls, name: str, basis_names: Sequence[str], brackets: Mapping, check: bool = True) -> "LieAlgebra":
        """Build from ``{(a, b): {c: coeff}}`` where labels may be names or 0-based indices.

        Pairs may be given in either order; ``(a, b)`` with ``a < b`` is
        stored negated.
        """
        names = list(basis_names)

        def idx(x):
            if isinstance(x, int):
                return x
            return names.index(x)

        struct: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (a, b), terms in brackets.items():
            i, j = idx(a), idx(b)
            if i == j:
                raise LieError("bracket of a basis element with itself is zero by definition")
            sign = 1
            if i < j:
                i, j, sign = j, i, -1
            if (i, j) in struct:
                raise LieError(f"bracket ({a}, {b}) given twice")
            items = terms.items() if isinstance(terms, Mapping) else terms
            struct[(i, j)] = {idx(k): sign * to_rat(c) for k, c in items}
        return cls(name, names, struct, check=check)

    # -- accessors -----------------------------------------------------------
    @property
    def structure(self) -> dict[tuple[int, int], tuple]:
        """Nonzero brackets as ``{(i, j): coefficient vector}`` with ``i > j``."""
        return dict(self._table)

    def basis_bracket(self, i: int, j: int) -> tuple:
        return self._br[i][j]

    def basis_vector(self, i: int) -> tuple:
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch("vector length does not match algebra dimension")
        out = [Fraction(0)] * n
        br = self._br
        for i, a in enumerate(u):
            if not a:
                continue
            row = br[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                w = row[j]
                ab = a * b
                for k, c in enumerate(w):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def ad_basis(self) -> list[QMat]:
        if self._ad_basis is None:
            self._ad_basis = [QMat.from_columns(self._br[i], rows=self.dim) if self.dim else QMat([]) for i in range(self.dim)]
        return self._ad_basis

    def is_abelian_algebra(self) -> bool:
        return not self._table

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.name, self.basis_names, self._table) == (other.name, other.basis_names, other._table)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.name, self.basis_names, tuple(sorted(self._table.items()))))

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, brackets={len(self._table)})"

    def describe(self) -> list[str]:
        """Human-readable nonzero brackets, e.g. ``[x4, x3] = x2``."""
        lines = []
        for (i, j) in sorted(self._table, key=lambda p: (-p[0], -p[1])):
            v = self._table[(i, j)]
            terms = []
            for k, c in enumerate(v):
                if c:
                    coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                    terms.append(f"{coef}{self.basis_names[k]}")
            lines.append(f"[{self.basis_names[i]}, {self.basis_names[j]}] = " + " + ".join(terms).replace("+ -", "- "))
        return lines


class AlgebraSubspace(Subspace):
    """A subspace of the underlying vector space of a Lie algebra."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: LieAlgebra, space: Subspace):
        if space.ambient_dim != algebra.dim:
            raise DimensionMismatch("subspace ambient dimension differs from algebra dimension")
        super().__init__(space.ambient_dim, space.basis)
        self.algebra = algebra

    @property
    def space(self) -> Subspace:
        return Subspace(self.ambient_dim, self.basis)

    def __repr__(self):
        return f"AlgebraSubspace({self.algebra.name!r}, dim={self.dim})"


def _wrap(g: LieAlgebra, s: Subspace) -> AlgebraSubspace:
    return s if isinstance(s, AlgebraSubspace) and s.algebra is g else AlgebraSubspace(g, s)


def abelian(n: int, name: str | None = None, basis_names: Sequence[str] | None = None) -> LieAlgebra:
    names = basis_names or [f"e{i + 1}" for i in range(n)]
    return LieAlgebra(name or f"R{n}", names, {})


# ---------------------------------------------------------------------------


def validate(g: LieAlgebra) -> JacobiFailure | None:
    """Check Jacobi on every basis triple; return the first failure or None."""
    n = g.dim
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = g.basis_vector(i), g.basis_vector(j), g.basis_vector(k)
        t1 = g.bracket(ei, g.basis_bracket(j, k))
        t2 = g.bracket(ej, g.basis_bracket(k, i))
        t3 = g.bracket(ek, g.basis_bracket(i, j))
        if any(a + b + c for a, b, c in zip(t1, t2, t3)):
            return JacobiFailure((i + 1, j + 1, k + 1))
    return None


def ad(g: LieAlgebra, v: Sequence) -> QMat:
    """Matrix of ``x -> [v, x]``; column ``j`` is ``[v, e_j]``."""
    if len(v) != g.dim:
        raise DimensionMismatch("vector length does not match algebra dimension")
    total = QMat.zeros(g.dim, g.dim)
    for a, m in zip(v, g.ad_basis()):
        a = to_rat(a)
        if a:
            total = total + m.scale(a)
    return total


def bracket_space(g: LieAlgebra, a: Subspace, b: Subspace) -> AlgebraSubspace:
    """The span of ``[a, b]``."""
    vecs = [g.bracket(u, v) for u in a.vectors() for v in b.vectors()]
    return AlgebraSubspace(g, Subspace.span(vecs, g.dim))


def _series(g: LieAlgebra, lower: bool) -> list[AlgebraSubspace]:
    cached = g._series_cache.get(lower)
    if cached is None:
        cached = g._series_cache[lower] = tuple(_compute_series(g, lower))
    return list(cached)


def _compute_series(g: LieAlgebra, lower: bool) -> list[AlgebraSubspace]:
    full = AlgebraSubspace(g, Subspace.full(g.dim))
    terms = [full]
    while True:
        cur = terms[-1]
        nxt = bracket_space(g, full if lower else cur, cur)
        if nxt == cur:
            return terms
        terms.append(nxt)
        if nxt.dim == 0:
            return terms


def lower_central_series(g: LieAlgebra) -> list[AlgebraSubspace]:
    """``g^1 = g, g^{k+1} = [g, g^k]`` until it stabilizes (stable term listed once)."""
    return _series(g, lower=True)


def derived_series(g: LieAlgebra) -> list[AlgebraSubspace]:
    return _series(g, lower=False)


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def centralizer(g: LieAlgebra, s: Subspace) -> AlgebraSubspace:
    """``{x : [x, s] = 0}``."""
    n = g.dim
    rows = []
    for v in s.vectors():
        # [x, v] = -ad(v) x, so the condition is ad(v) x = 0
        m = ad(g, v)
        rows.extend(m.row(i) for i in range(n))
    if not rows:
        return AlgebraSubspace(g, Subspace.full(n))
    return AlgebraSubspace(g, kernel(QMat(rows, cols=n)))


def center(g: LieAlgebra) -> AlgebraSubspace:
    return centralizer(g, Subspace.full(g.dim))


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return all(g.bracket(g.basis_vector(i), v) in s for i in range(g.dim) for v in s.vectors())


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors()
    return all(g.bracket(u, v) in s for u, v in combinations(vs, 2))


def is_abelian(g: LieAlgebra, s: Subspace | None = None) -> bool:
    if s is None:
        return g.is_abelian_algebra()
    vs = s.vectors()
    return all(not any(g.bracket(u, v)) for u, v in combinations(vs, 2))


def is_unimodular(g: LieAlgebra) -> bool:
    return all(m.trace() == 0 for m in g.ad_basis())


def _restricted(g: LieAlgebra, s: Subspace, v: Sequence) -> QMat:
    """Matrix of ad(v) restricted to the invariant subspace s, in s's echelon basis."""
    cols = [s.coordinates(g.bracket(v, w)) for w in s.vectors()]
    return QMat.from_columns(cols, rows=s.dim) if cols else QMat([])


def trace_on(g: LieAlgebra, s: Subspace) -> list[Fraction]:
    """``tr(ad e_i | s)`` for each basis element; ``s`` must be an ideal."""
    if not is_ideal(g, s):
        raise NotAnIdeal("trace_on needs an ideal")
    if s.dim == 0:
        return [Fraction(0)] * g.dim
    return [_restricted(g, s, g.basis_vector(i)).trace() for i in range(g.dim)]


def restricted_ad(g: LieAlgebra, s: Subspace, v: Sequence) -> QMat:
    """Public form of the restriction of ad(v) to an ad(v)-invariant subspace."""
    return _restricted(g, s, v)


def quotient(g: LieAlgebra, i: Subspace, name: str | None = None) -> LieAlgebra:
    """``g / i`` on the lexicographically earliest standard complement."""
    if not is_ideal(g, i):
        raise NotAnIdeal("quotient needs an ideal")
    comp = i.complement_basis()
    idx = [next(k for k, x in enumerate(c) if x) for c in comp]
    # coordinates of a vector modulo i in the complement basis:
    # write v = sum a_c comp_c + (element of i); solve via a full basis change
    full = QMat.from_columns(comp + i.vectors(), rows=g.dim)
    inv = full.inverse() if g.dim else full
    m = len(comp)

    def coords(v):
        return inv.apply(v)[:m]

    struct = {}
    for a in range(m):
        for b in range(a):
            w = coords(g.bracket(comp[a], comp[b]))
            if any(w):
                struct[(a, b)] = {k: c for k, c in enumerate(w) if c}
    names = [g.basis_names[k] for k in idx]
    return LieAlgebra(name or f"{g.name}/ideal", names, struct)


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    names = list(a.basis_names)
    for nm in b.basis_names:
        names.append(nm if nm not in names else nm + "'")
    struct = {}
    for (i, j), v in a.structure.items():
        struct[(i, j)] = {k: c for k, c in enumerate(v) if c}
    off = a.dim
    for (i, j), v in b.structure.items():
        struct[(i + off, j + off)] = {k + off: c for k, c in enumerate(v) if c}
    return LieAlgebra(name or f"{a.name}+{b.name}", names, struct)


def is_derivation(g: LieAlgebra, d: QMat) -> bool:
    n = g.dim
    if d.shape != (n, n):
        return False
    cols = d.columns()
    for i in range(n):
        for j in range(i):
            lhs = d.apply(g.basis_bracket(i, j))
            r1 = g.bracket(cols[i], g.basis_vector(j))
            r2 = g.bracket(g.basis_vector(i), cols[j])
            if any(x - y - z for x, y, z in zip(lhs, r1, r2)):
                return False
    return True


def semidirect_sum(
    n: LieAlgebra,
    base_dim: int,
    action: Sequence[QMat],
    name: str | None = None,
    base_names: Sequence[str] | None = None,
) -> LieAlgebra:
    """``n`` extended by an abelian ``R^base_dim`` acting through ``action``.

    The basis is that of ``n`` followed by the base elements, which are
    named ``z`` (one) or ``z1 .. zk``.
    """
    if len(action) != base_dim:
        raise DimensionMismatch("need one action matrix per base element")
    for a, m in enumerate(action):
        if m.shape != (n.dim, n.dim):
            raise DimensionMismatch(f"action matrix {a} has shape {m.shape}")
        if not is_derivation(n, m):
            raise NotADerivation(a)
    for a, b in combinations(range(base_dim), 2):
        if not action[a].commutator(action[b]).is_zero():
            raise ActionsDoNotCommute((a, b))
    if base_names is None:
        base_names = ["z"] if base_dim == 1 else [f"z{k + 1}" for k in range(base_dim)]
    names = list(n.basis_names) + list(base_names)
    struct = {}
    for (i, j), v in n.structure.items():
        struct[(i, j)] = {k: c for k, c in enumerate(v) if c}
    for a, m in enumerate(action):
        for j in range(n.dim):
            col = m.col(j)
            if any(col):
                struct[(n.dim + a, j)] = {k: c for k, c in enumerate(col) if c}
    return LieAlgebra(name or f"{n.name}⋊R{base_dim}", names, struct)


def change_basis(g: LieAlgebra, p: QMat, name: str | None = None, basis_names: Sequence[str] | None = None) -> LieAlgebra:
    """Same algebra written in the basis given by the columns of invertible ``p``."""
    n = g.dim
    if p.shape != (n, n):
        raise DimensionMismatch("basis change must be square of the algebra's dimension")
    inv = p.inverse()
    cols = p.columns()
    struct = {}
    for i in range(n):
        for j in range(i):
            w = inv.apply(g.bracket(cols[i], cols[j]))
            if any(w):
                struct[(i, j)] = {k: c for k, c in enumerate(w) if c}
    names = basis_names or [f"f{k + 1}" for k in range(n)]
    return LieAlgebra(name or g.name, names, struct)


def subalgebra(g: LieAlgebra, s: Subspace, name: str | None = None) -> LieAlgebra:
    """Subalgebra on the echelon basis of ``s``."""
    if not is_subalgebra(g, s):
        raise LieError("subspace is not closed under the bracket")
    vs = s.vectors()
    struct = {}
    for i in range(len(vs)):
        for j in range(i):
            w = s.coordinates(g.bracket(vs[i], vs[j]))
            if any(w):
                struct[(i, j)] = {k: c for k, c in enumerate(w) if c}
    names = []
    for v in vs:
        nz = [k for k, x in enumerate(v) if x]
        names.append(g.basis_names[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"v{len(names) + 1}")
    if len(set(names)) != len(names):
        names = [f"v{k + 1}" for k in range(len(vs))]
    return LieAlgebra(name or f"sub({g.name})", names, struct)


# ---------------------------------------------------------------------------


class Representation:
    """Matrices ``rho(e_i)`` on a module of dimension ``module_dim``."""

    def __init__(self, algebra: LieAlgebra, matrices: Sequence[QMat], module_dim: int | None = None, check: bool = True):
        mats = [m if isinstance(m, QMat) else QMat(m) for m in matrices]
        if len(mats) != algebra.dim:
            raise DimensionMismatch("need one matrix per basis element")
        if module_dim is None:
            module_dim = mats[0].rows if mats else 0
        for m in mats:
            if m.shape != (module_dim, module_dim):
                raise DimensionMismatch("representation matrices must be module_dim square")
        self.algebra = algebra
        self.module_dim = module_dim
        self.matrices = tuple(mats)
        if check:
            for i in range(algebra.dim):
                for j in range(i):
                    lhs = self.of(algebra.basis_bracket(i, j))
                    if lhs != mats[i].commutator(mats[j]):
                        raise NotARepresentation(f"rho([e{i + 1}, e{j + 1}]) differs from the commutator")

    def of(self, v: Sequence) -> QMat:
        total = QMat.zeros(self.module_dim, self.module_dim)
        for a, m in zip(v, self.matrices):
            if a:
                total = total + m.scale(a)
        return total

    @classmethod
    def trivial(cls, g: LieAlgebra, module_dim: int) -> "Representation":
        return cls(g, [QMat.zeros(module_dim, module_dim)] * g.dim, module_dim)

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "Representation":
        return cls(g, g.ad_basis(), g.dim)

    def __repr__(self):
        return f"Representation({self.algebra.name!r}, module_dim={self.module_dim})"


# ---------------------------------------------------------------------------
# abelian 2-dim subalgebras of sl(3)

R2_CLASSES = ("φ1", "φ2", "φ3", "φ4", "φ5", "φ6")
_SCAN = (0, 1, 2, 3, 5, 7)


def _eigen_kind(m: QMat) -> tuple[bool, int]:
    """(all eigenvalues real, number of distinct eigenvalues) for a 3x3 matrix."""
    sf = squarefree_part(char_poly(m))
    real = sturm_count(sf)
    return real == sf.degree, sf.degree


def r2_embedding_class(m1: QMat, m2: QMat) -> str:
    """Which of the six abelian embeddings of R^2 in sl(3, R) spans ``m1, m2``.

    Returns ``"φ1"`` .. ``"φ6"`` or one of ``"NotCommuting"``,
    ``"NotTraceless"``, ``"NotFaithful"``.
    """
    if m1.shape != (3, 3) or m2.shape != (3, 3):
        raise DimensionMismatch("r2_embedding_class needs 3x3 matrices")
    if not m1.commutator(m2).is_zero():
        return "NotCommuting"
    if m1.trace() != 0 or m2.trace() != 0:
        return "NotTraceless"
    if QMat([m1.flatten(), m2.flatten()]).rank() < 2:
        return "NotFaithful"
    nil1 = (m1 ** 3).is_zero()
    nil2 = (m2 ** 3).is_zero()
    samples = [m1 + m2.scale(t) for t in _SCAN] + [m2]
    if nil1 and nil2:
        if max(s.rank() for s in samples) == 2:
            return "φ1"
        image = Subspace.span(m1.columns() + m2.columns(), 3)
        return "φ3" if image.dim == 1 else "φ2"
    kinds = [_eigen_kind(s) for s in samples]
    if any(not real for real, _ in kinds):
        return "φ5"
    if any(d == 3 for _, d in kinds):
        return "φ6"
    return "φ4"


def r2_standard(k: int) -> tuple[QMat, QMat]:
    """Standard matrices of the ``k``-th embedding at (x, y) = (1, 0) and (0, 1)."""
    def grid(entries):
        m = [[0] * 3 for _ in range(3)]
        for (r, c), v in entries.items():
            m[r][c] = v
        return QMat(m)

    table = {
        1: ({(0, 1): 1, (1, 2): 1}, {(0, 2): 1}),
        2: ({(1, 2): 1}, {(0, 2): 1}),
        3: ({(0, 1): 1}, {(0, 2): 1}),
        4: ({(0, 0): 1, (1, 1): 1, (2, 2): -2}, {(0, 1): 1}),
        5: ({(0, 0): 1, (1, 1): 1, (2, 2): -2}, {(0, 1): 1, (1, 0): -1}),
        6: ({(0, 0): 1, (2, 2): -1}, {(1, 1): 1, (2, 2): -1}),
    }
    if k not in table:
        raise ValueError("embedding index must be 1..6")
    a, b = table[k]
    return grid(a), grid(b)
