"""Chevalley-Eilenberg cochains of a Lie algebra with coefficients in a module.

A p-cochain is stored as its values on the basis p-vectors
``e_{j0} ^ ... ^ e_{j(p-1)}`` (``j0 < ... < j(p-1)``, lexicographic order),
each value being a vector in the module. Coordinate ``J * m + a`` is
component ``a`` of the value on the ``J``-th p-vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .liealg import LieAlgebra, LieError, Representation, abelian, semidirect_sum
from .qlinalg import QMat, Subspace, kernel, to_rat

__all__ = [
    "CochainComplex",
    "Cocycle2",
    "NotACocycle",
    "UnsupportedShape",
    "wedge_basis",
    "ce_complex",
    "boundary",
    "cohomology_dim",
    "coboundary_of",
    "extension_from_cocycle",
]


class NotACocycle(LieError):
    pass


class UnsupportedShape(LieError):
    pass


@lru_cache(maxsize=None)
def wedge_basis(n: int, p: int) -> tuple:
    if p < 0 or p > n:
        return ()
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def _wedge_index(n: int, p: int) -> dict:
    return {t: k for k, t in enumerate(wedge_basis(n, p))}


def _sorted_sign(seq: list[int]) -> tuple[int, tuple] | None:
    """Sort a list of distinct indices, returning (sign of permutation, sorted tuple)."""
    if len(set(seq)) != len(seq):
        return None
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


def boundary(g: LieAlgebra, rep: Representation, p: int) -> QMat:
    """The map d_p : C^p -> C^{p+1}.

    (dc)(x_0..x_p) = sum_i (-1)^i x_i . c(.. x_i omitted ..)
                   + sum_{i<j} (-1)^{i+j} c([x_i, x_j], .. x_i, x_j omitted ..)
    """
    n, m = g.dim, rep.module_dim
    src = wedge_basis(n, p)
    tgt = wedge_basis(n, p + 1)
    ncols = len(src) * m
    nrows = len(tgt) * m
    rows = [[Fraction(0)] * ncols for _ in range(nrows)]
    if not ncols or not nrows:
        return QMat(rows, cols=ncols)
    src_index = _wedge_index(n, p)
    for t_idx, t in enumerate(tgt):
        base_row = t_idx * m
        # action terms
        for i, xi in enumerate(t):
            rest = t[:i] + t[i + 1:]
            s_idx = src_index[rest]
            sign = -1 if i % 2 else 1
            rho = rep.matrices[xi]
            for a in range(m):
                for b in range(m):
                    c = rho[a, b]
                    if c:
                        rows[base_row + a][s_idx * m + b] += sign * c
        # bracket terms
        for i in range(len(t)):
            for j in range(i + 1, len(t)):
                sign = -1 if (i + j) % 2 else 1
                rest = [x for k, x in enumerate(t) if k not in (i, j)]
                br = g.basis_bracket(t[i], t[j])
                for k, coef in enumerate(br):
                    if not coef:
                        continue
                    srt = _sorted_sign([k] + rest)
                    if srt is None:
                        continue
                    s2, key = srt
                    s_idx = src_index[key]
                    f = sign * s2 * coef
                    for a in range(m):
                        rows[base_row + a][s_idx * m + a] += f
    return QMat(rows, cols=ncols)


@dataclass(frozen=True)
class CochainComplex:
    algebra: LieAlgebra
    rep: Representation
    boundaries: tuple  # d_0 .. d_{n-1}

    def cochain_dim(self, p: int) -> int:
        return comb(self.algebra.dim, p) * self.rep.module_dim if 0 <= p <= self.algebra.dim else 0

    def boundary(self, p: int) -> QMat:
        if 0 <= p < len(self.boundaries):
            return self.boundaries[p]
        return boundary(self.algebra, self.rep, p)


def ce_complex(g: LieAlgebra, rep: Representation) -> CochainComplex:
    if rep.algebra.dim != g.dim:
        raise LieError("representation is for a different algebra")
    return CochainComplex(g, rep, tuple(boundary(g, rep, p) for p in range(g.dim)))


def cohomology_dim(g: LieAlgebra, rep: Representation, p: int) -> int:
    """dim ker d_p - rank d_{p-1}."""
    if p < 0 or p > g.dim:
        raise ValueError("degree must satisfy 0 <= p <= dim g")
    dp = boundary(g, rep, p)
    ker_dim = dp.cols - (dp.rank() if dp.rows else 0)
    if p == 0:
        return ker_dim
    dprev = boundary(g, rep, p - 1)
    return ker_dim - dprev.rank()


class Cocycle2:
    """A 2-cochain given by its values on basis pairs ``(i, j)``, ``i < j`` (0-based)."""

    def __init__(self, rep: Representation, value_on_pairs: Mapping[tuple[int, int], Sequence], check: bool = True):
        n, m = rep.algebra.dim, rep.module_dim
        vals = {}
        for (i, j), v in value_on_pairs.items():
            if not (0 <= i < j < n):
                raise ValueError(f"cocycle pair {(i, j)} must satisfy 0 <= i < j < dim")
            v = tuple(to_rat(x) for x in v)
            if len(v) != m:
                raise ValueError("cocycle value has the wrong length")
            if any(v):
                vals[(i, j)] = v
        self.rep = rep
        self.value_on_pairs = vals
        if check and not self.is_cocycle():
            raise NotACocycle("d_2 c is not zero")

    @classmethod
    def from_vector(cls, rep: Representation, vec: Sequence, check: bool = True) -> "Cocycle2":
        n, m = rep.algebra.dim, rep.module_dim
        vals = {}
        for k, (i, j) in enumerate(wedge_basis(n, 2)):
            vals[(i, j)] = vec[k * m:(k + 1) * m]
        return cls(rep, vals, check=check)

    @classmethod
    def zero(cls, rep: Representation) -> "Cocycle2":
        return cls(rep, {})

    def vector(self) -> tuple:
        n, m = self.rep.algebra.dim, self.rep.module_dim
        out = []
        zero = (Fraction(0),) * m
        for pair in wedge_basis(n, 2):
            out.extend(self.value_on_pairs.get(pair, zero))
        return tuple(out)

    def is_cocycle(self) -> bool:
        d2 = boundary(self.rep.algebra, self.rep, 2)
        return d2.rows == 0 or not any(d2.apply(self.vector()))

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2.from_vector(self.rep, [a + b for a, b in zip(self.vector(), other.vector())], check=False)


def coboundary_of(rep: Representation, b: Sequence) -> Cocycle2:
    """``d_1 b`` for a 1-cochain ``b`` (value on e_i is ``b[i*m:(i+1)*m]``)."""
    d1 = boundary(rep.algebra, rep, 1)
    return Cocycle2.from_vector(rep, d1.apply(b), check=False)


def extension_from_cocycle(
    rep: Representation,
    c: Cocycle2,
    name: str | None = None,
    module_names: Sequence[str] | None = None,
    base_names: Sequence[str] | None = None,
) -> LieAlgebra:
    """Extension of an abelian base ``R^k`` by the abelian module ``R^m``.

    The module comes first in the basis, followed by the base. Base-module
    brackets are the action; base-base brackets are ``[q_a, q_b] = c(q_a, q_b)``.
    """
    base = rep.algebra
    if not base.is_abelian_algebra():
        raise UnsupportedShape("extensions are implemented for an abelian base only")
    if c.rep is not rep and (c.rep.algebra.dim, c.rep.module_dim, c.rep.matrices) != (base.dim, rep.module_dim, rep.matrices):
        raise LieError("cocycle belongs to a different representation")
    if not c.is_cocycle():
        raise NotACocycle("d_2 c is not zero")
    m, k = rep.module_dim, base.dim
    names = module_names or [f"x{i + 1}" for i in range(m)]
    module = abelian(m, basis_names=names)
    split = semidirect_sum(module, k, list(rep.matrices), name=name, base_names=base_names)
    if not c.value_on_pairs:
        return split
    struct = {key: {i: x for i, x in enumerate(v) if x} for key, v in split.structure.items()}
    for (a, b), v in c.value_on_pairs.items():
        # [q_a, q_b] = v with a < b is stored as [q_b, q_a] = -v
        struct[(m + b, m + a)] = {i: -x for i, x in enumerate(v) if x}
    return LieAlgebra(split.name, split.basis_names, struct)
