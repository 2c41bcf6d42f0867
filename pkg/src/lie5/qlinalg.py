"""Exact rational linear algebra and univariate polynomials.

Everything here works over ``fractions.Fraction``; there is no floating point.
Matrices (:class:`QMat`), polynomials (:class:`Poly`) and subspaces
(:class:`Subspace`) are immutable values.

Matrix convention: a matrix acts on column vectors, so column ``j`` of the
matrix of a linear map is the image of the ``j``-th basis vector.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "Rat",
    "to_rat",
    "format_rat",
    "parse_rat",
    "QMat",
    "Poly",
    "Subspace",
    "rref",
    "kernel",
    "char_poly",
    "min_poly",
    "squarefree_part",
    "poly_gcd",
    "sturm_sequence",
    "sturm_count",
    "real_root_intervals",
    "exp_nilpotent",
    "resultant",
    "LinalgError",
    "NonSquare",
    "ZeroPolynomial",
    "NotSquarefree",
    "NotNilpotent",
    "SingularMatrix",
]

Rat = Fraction


class LinalgError(ValueError):
    pass


class NonSquare(LinalgError):
    pass


class ZeroPolynomial(LinalgError):
    pass


class NotSquarefree(LinalgError):
    pass


class NotNilpotent(LinalgError):
    pass


class SingularMatrix(LinalgError):
    pass


def to_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {s!r}")
    return Fraction(s)


def format_rat(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = to_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


Vector = tuple  # tuple of Fractions


def _vec(v: Iterable) -> tuple:
    return tuple(x if type(x) is Fraction else to_rat(x) for x in v)


# ---------------------------------------------------------------------------
# matrices


class QMat:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("_rows", "rows", "cols", "_hash")

    def __init__(self, data: Sequence[Sequence] = (), cols: int | None = None):
        rows = tuple(_vec(r) for r in data)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged matrix data")
            if cols is not None and cols != ncols:
                raise ValueError("column count does not match data")
        else:
            ncols = 0 if cols is None else cols
        self._rows = rows
        self.rows = len(rows)
        self.cols = ncols
        self._hash = None

    # construction helpers
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMat":
        z = Fraction(0)
        return cls([[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def diag(cls, entries: Sequence) -> "QMat":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "QMat":
        columns = [_vec(c) for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        nrows = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(nrows)], cols=len(columns))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "QMat":
        flat = _vec(flat)
        if len(flat) != rows * cols:
            raise ValueError("flat data has the wrong length")
        return cls([flat[i * cols:(i + 1) * cols] for i in range(rows)], cols=cols)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "QMat":
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)], cols=n)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def flatten(self) -> tuple:
        return tuple(x for r in self._rows for x in r)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    # arithmetic
    def __eq__(self, other):
        if not isinstance(other, QMat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._rows))
        return self._hash

    def __add__(self, other: "QMat") -> "QMat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMat([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], cols=self.cols)

    def __sub__(self, other: "QMat") -> "QMat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMat([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], cols=self.cols)

    def __neg__(self) -> "QMat":
        return QMat([[-a for a in r] for r in self._rows], cols=self.cols)

    def scale(self, c) -> "QMat":
        c = to_rat(c)
        return QMat([[c * a for a in r] for r in self._rows], cols=self.cols)

    def __mul__(self, c):
        if isinstance(c, QMat):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "QMat") -> "QMat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Fraction(0)
        orows = other._rows
        out = []
        for r in self._rows:
            acc = [zero] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return QMat(out, cols=other.cols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        v = _vec(v)
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._rows)

    def __pow__(self, k: int) -> "QMat":
        if not self.is_square:
            raise NonSquare("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = QMat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "QMat":
        return QMat([self.col(j) for j in range(self.cols)], cols=self.rows)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise NonSquare("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square:
            raise NonSquare("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        det = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det *= a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> "QMat":
        if not self.is_square:
            raise NonSquare("inverse of a non-square matrix")
        n = self.rows
        aug = QMat([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self._rows)])
        red, _ = rref(aug)
        if red.block(range(n), range(n)) != QMat.identity(n):
            raise SingularMatrix("matrix is not invertible")
        return QMat([red.row(i)[n:] for i in range(n)], cols=n)

    def rank(self) -> int:
        return rref(self)[1]

    def commutator(self, other: "QMat") -> "QMat":
        return self @ other - other @ self

    def vstack(self, other: "QMat") -> "QMat":
        if self.rows == 0:
            return other
        if other.rows == 0:
            return self
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return QMat(self._rows + other._rows, cols=self.cols)

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "QMat":
        return QMat([[self._rows[i][j] for j in cols] for i in rows], cols=len(cols))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rat(x) for x in r) + "]" for r in self._rows)
        return f"QMat([{body}])"


def rref(m: QMat) -> tuple[QMat, int]:
    """Reduced row-echelon form of ``m`` and its rank."""
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            inv = 1 / piv
            a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], pr)]
        r += 1
    return QMat(a, cols=ncols), r


def _pivots(echelon: QMat) -> list[int]:
    piv = []
    for i in range(echelon.rows):
        row = echelon.row(i)
        for j, x in enumerate(row):
            if x != 0:
                piv.append(j)
                break
    return piv


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of Q^n held by its canonical reduced row-echelon basis.

    Two subspaces are equal exactly when their echelon bases are equal.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: QMat):
        # basis must already be in reduced echelon form without zero rows
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(_pivots(basis))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [_vec(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        if not vecs:
            return cls.zero(ambient_dim)
        red, rank = rref(QMat(vecs, cols=ambient_dim))
        return cls(ambient_dim, QMat([red.row(i) for i in range(rank)], cols=ambient_dim))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, QMat([], cols=n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, QMat.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors with the given 0-based indices."""
        return cls.span([[1 if k == i else 0 for k in range(n)] for i in indices], n)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def reduce(self, v: Sequence) -> tuple:
        """Normal form of ``v`` modulo this subspace (zero at every pivot)."""
        v = list(_vec(v))
        for row, p in zip(self.vectors(), self.pivots):
            f = v[p]
            if f:
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the space."""
        v = _vec(v)
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def issubset(self, other: "Subspace") -> bool:
        return all(v in other for v in self.vectors())

    __le__ = issubset

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """Linear functionals (as row vectors) vanishing on the subspace."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        ann = self.annihilator().vectors() + other.annihilator().vectors()
        if not ann:
            return Subspace.full(self.ambient_dim)
        return kernel(QMat(ann, cols=self.ambient_dim))

    __and__ = intersection

    def complement_basis(self) -> list[tuple]:
        """Earliest standard basis vectors that complete the subspace."""
        n = self.ambient_dim
        chosen: list[tuple] = []
        current = self
        for i in range(n):
            if current.dim == n:
                break
            e = tuple(Fraction(1 if k == i else 0) for k in range(n))
            if e not in current:
                chosen.append(e)
                current = Subspace.span(current.vectors() + [e], n)
        return chosen

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.vectors()!r})"


def kernel(m: QMat) -> Subspace:
    """Right null space ``{v : m v = 0}`` as a canonical subspace."""
    red, rank = rref(m)
    piv = _pivots(QMat([red.row(i) for i in range(rank)], cols=m.cols))
    free = [j for j in range(m.cols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red[i, f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Univariate polynomial with Fraction coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = list(_vec(coeffs))
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = to_rat(other)
            return Poly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        d = other.degree
        for k in range(dq, -1, -1):
            f = rem[k + d] * inv
            quot[k] = f
            if f:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= f * b
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        return self * (1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        if isinstance(x, QMat):
            if not x.is_square:
                raise NonSquare("polynomial of a non-square matrix")
            acc = QMat.zeros(x.rows, x.cols)
            ident = QMat.identity(x.rows)
            for c in reversed(self.coeffs):
                acc = acc @ x + ident.scale(c)
            return acc
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scaled(self, s) -> "Poly":
        """``s^deg * p(x / s)``: the polynomial whose roots are ``s`` times ours."""
        s = to_rat(s)
        n = self.degree
        return Poly(c * s ** (n - i) for i, c in enumerate(self.coeffs))

    def reversed(self) -> "Poly":
        """``x^deg * p(1/x)``."""
        return Poly(reversed(self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = format_rat(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{format_rat(a)}{mono}" if a.denominator == 1 else f"({format_rat(a)})*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')`` made monic."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def char_poly(m: QMat) -> Poly:
    """``det(xI - m)`` by the Faddeev-LeVerrier recurrence."""
    if not m.is_square:
        raise NonSquare("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = QMat.identity(n)
    mk = QMat.zeros(n, n)
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(c))
        c = -mk.trace() / k
        coeffs[n - k] = c
    return Poly(coeffs)


def min_poly(m: QMat) -> Poly:
    """Minimal polynomial: the first power of ``m`` dependent on the lower ones."""
    if not m.is_square:
        raise NonSquare("minimal polynomial of a non-square matrix")
    n = m.rows
    powers = [QMat.identity(n).flatten()]
    cur = QMat.identity(n)
    for k in range(1, n + 1):
        cur = cur @ m
        powers.append(cur.flatten())
        # solve sum_{i<k} a_i m^i = -m^k
        system = QMat.from_columns(powers)
        ker = kernel(system)
        if ker.dim:
            # the unique relation with a nonzero top coefficient
            v = ker.vectors()[-1]
            for vec in ker.vectors():
                if vec[k] != 0:
                    v = vec
            return Poly(v).monic()
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _variations(signs: Iterable[int]) -> int:
    s = [x for x in signs if x != 0]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(seq: list[Poly], x) -> list[int]:
    if x is None or x == "inf":
        return [_sign(q.lc) for q in seq]
    if x == "-inf":
        return [_sign(q.lc) * (-1) ** q.degree for q in seq]
    return [_sign(q(x)) for q in seq]


def _check_squarefree(p: Poly) -> None:
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no finite root set")
    if poly_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree(f"{p} has repeated roots; apply squarefree_part first")


def sturm_count(p: Poly, lo=None, hi=None, _seq: list[Poly] | None = None) -> int:
    """Number of real roots of squarefree ``p`` in the open interval ``(lo, hi)``.

    ``None`` endpoints stand for minus and plus infinity respectively.
    """
    if _seq is None:
        _check_squarefree(p)
        seq = sturm_sequence(p)
    else:
        seq = _seq
    if p.degree == 0:
        return 0
    a = "-inf" if lo is None else to_rat(lo)
    b = "inf" if hi is None else to_rat(hi)
    if a != "-inf" and b != "inf" and a >= b:
        return 0
    count = _variations(_signs_at(seq, a)) - _variations(_signs_at(seq, b))
    if b != "inf" and p(b) == 0:
        count -= 1
    return count


def cauchy_bound(p: Poly) -> Fraction:
    lc = p.lc
    return 1 + max((abs(c / lc) for c in p.coeffs[:-1]), default=Fraction(0))


def real_root_intervals(p: Poly, width) -> list[tuple[Fraction, Fraction]]:
    """Isolate the real roots of squarefree ``p`` by Sturm bisection.

    Returns ascending ``(lo, hi)`` pairs, one per root. When ``lo < hi`` the
    root lies in the open interval ``(lo, hi)``; a bisection point that hits a
    root exactly is returned as ``(r, r)``. Every pair has ``hi - lo <= width``.
    """
    width = to_rat(width)
    if width <= 0:
        raise ValueError("width must be positive")
    _check_squarefree(p)
    if p.degree <= 0:
        return []
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, sturm_count(p, -bound, bound, _seq=seq))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and hi - lo <= width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p(mid) == 0:
            out.append((mid, mid))
        left = sturm_count(p, lo, mid, _seq=seq)
        right = n - left - (1 if p(mid) == 0 else 0)
        stack.append((mid, hi, right))
        stack.append((lo, mid, left))
    out.sort()
    return out


def is_nilpotent_matrix(m: QMat) -> bool:
    return (m ** m.rows).is_zero() if m.rows else True


def exp_nilpotent(m: QMat) -> QMat:
    """Exact ``exp(m)`` for nilpotent ``m`` as the finite sum of ``m^k / k!``."""
    if not m.is_square:
        raise NonSquare("exponential of a non-square matrix")
    n = m.rows
    if not is_nilpotent_matrix(m):
        raise NotNilpotent("matrix is not nilpotent")
    total = QMat.identity(n)
    term = QMat.identity(n)
    for k in range(1, n):
        term = term @ m
        if term.is_zero():
            break
        total = total + term.scale(Fraction(1, factorial(k)))
    return total


def sylvester_matrix(p: Poly, q: Poly) -> QMat:
    n, m = p.degree, q.degree
    size = n + m
    rows = []
    # rows of q first, then rows of p; coefficients from the top degree down
    for i in range(n):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(q.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(p.coeffs)):
            row[i + k] = c
        rows.append(row)
    return QMat(rows, cols=size)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Resultant normalized as ``lc(q)^deg(p) * prod_{q(b)=0} p(b)``.

    With this normalization ``resultant(p, x - b) == p(b)``.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    if q.degree == 0:
        return q.lc ** p.degree
    if p.degree == 0:
        return p.lc ** q.degree
    return sylvester_matrix(p, q).det()
