"""The Lie algebra file format and JSON helpers.

A Lie algebra file is::

    {"name": "n3", "dim": 3, "basis": ["x1", "x2", "x3"],
     "brackets": [{"i": 3, "j": 2, "terms": [{"k": 1, "c": "1"}]}]}

Indices are 1-based and every bracket must have ``i > j``. Coefficients are
exact rationals written ``"p/q"`` or ``"p"``. Output is deterministic:
brackets sorted by ``(i, j)``, terms by ``k``, zero terms omitted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .liealg import LieAlgebra, Representation
from .qlinalg import QMat, format_rat, parse_rat

__all__ = [
    "FormatError",
    "algebra_to_dict",
    "algebra_to_json",
    "algebra_from_dict",
    "algebra_from_json",
    "load_algebra",
    "representation_from_json",
    "load_representation",
    "matrix_to_json",
    "matrix_from_json",
    "dumps",
    "rat_json",
]


class FormatError(ValueError):
    """Malformed input; ``line`` and ``col`` locate JSON syntax errors (1-based)."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None, path: str = ""):
        self.line, self.col, self.path = line, col, path
        where = ""
        if line is not None:
            where = f" at line {line}, column {col}"
        elif path:
            where = f" at {path}"
        super().__init__(message + where)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def rat_json(x) -> str:
    return format_rat(Fraction(x))


def matrix_to_json(m: QMat) -> list:
    return [[format_rat(x) for x in m.row(i)] for i in range(m.rows)]


def _rat(value, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError("coefficients must be exact rationals (integer or \"p/q\" string)", path=path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rat(value)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"cannot parse rational {value!r}", path=path) from None
    raise FormatError("coefficients must be exact rationals", path=path)


def matrix_from_json(data, path: str = "matrix") -> QMat:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise FormatError("matrix must be a list of rows", path=path)
    if data and len({len(r) for r in data}) != 1:
        raise FormatError("matrix rows have different lengths", path=path)
    return QMat([[_rat(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(data)])


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(g.structure):
        v = g.structure[(i, j)]
        terms = [{"k": k + 1, "c": format_rat(c)} for k, c in enumerate(v) if c]
        brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
    return {"name": g.name, "dim": g.dim, "basis": list(g.basis_names), "brackets": brackets}


def algebra_to_json(g: LieAlgebra) -> str:
    return dumps(algebra_to_dict(g))


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError("expected an integer", path=path)
    return value


def algebra_from_dict(data: Any, check: bool = True) -> LieAlgebra:
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    for key in ("name", "dim", "basis", "brackets"):
        if key not in data:
            raise FormatError(f"missing field {key!r}")
    extra = set(data) - {"name", "dim", "basis", "brackets", "params"}
    if extra:
        raise FormatError(f"unknown fields {sorted(extra)}")
    name = data["name"]
    if not isinstance(name, str):
        raise FormatError("name must be a string", path="name")
    dim = _int(data["dim"], "dim")
    basis = data["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FormatError("basis must be a list of strings", path="basis")
    if len(basis) != dim:
        raise FormatError(f"basis has {len(basis)} labels but dim is {dim}", path="basis")
    if len(set(basis)) != len(basis):
        raise FormatError("basis labels must be distinct", path="basis")
    if not isinstance(data["brackets"], list):
        raise FormatError("brackets must be a list", path="brackets")
    struct = {}
    for n, br in enumerate(data["brackets"]):
        p = f"brackets[{n}]"
        if not isinstance(br, dict) or set(br) != {"i", "j", "terms"}:
            raise FormatError("bracket entries need exactly the fields i, j, terms", path=p)
        i, j = _int(br["i"], p + ".i"), _int(br["j"], p + ".j")
        if not (1 <= j < i <= dim):
            raise FormatError(f"bracket indices must satisfy dim >= i > j >= 1, got i={i}, j={j}", path=p)
        if (i, j) in struct:
            raise FormatError(f"duplicate bracket ({i}, {j})", path=p)
        terms = br["terms"]
        if not isinstance(terms, list):
            raise FormatError("terms must be a list", path=p + ".terms")
        coeffs: dict[int, Fraction] = {}
        for t_n, t in enumerate(terms):
            tp = f"{p}.terms[{t_n}]"
            if not isinstance(t, dict) or set(t) != {"k", "c"}:
                raise FormatError("term entries need exactly the fields k, c", path=tp)
            k = _int(t["k"], tp + ".k")
            if not 1 <= k <= dim:
                raise FormatError(f"term index {k} out of range", path=tp)
            if k - 1 in coeffs:
                raise FormatError(f"duplicate term index {k}", path=tp)
            coeffs[k - 1] = _rat(t["c"], tp + ".c")
        struct[(i, j)] = coeffs
    return LieAlgebra(name, basis, {(i - 1, j - 1): c for (i, j), c in struct.items()}, check=check)


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", line=exc.lineno, col=exc.colno) from None


def algebra_from_json(text: str, check: bool = True) -> LieAlgebra:
    return algebra_from_dict(_loads(text), check=check)


def load_algebra(path: str, check: bool = True) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_json(fh.read(), check=check)


def representation_from_json(text: str, g: LieAlgebra) -> Representation:
    """``{"module_dim": m, "matrices": [matrix per basis element]}``."""
    data = _loads(text)
    if not isinstance(data, dict) or set(data) != {"module_dim", "matrices"}:
        raise FormatError("representation needs exactly the fields module_dim, matrices")
    m = _int(data["module_dim"], "module_dim")
    mats = data["matrices"]
    if not isinstance(mats, list) or len(mats) != g.dim:
        raise FormatError(f"need {g.dim} matrices, one per basis element", path="matrices")
    parsed = [matrix_from_json(x, f"matrices[{k}]") for k, x in enumerate(mats)]
    for k, q in enumerate(parsed):
        if q.shape != (m, m):
            raise FormatError(f"matrix {k} must be {m}x{m}", path=f"matrices[{k}]")
    return Representation(g, parsed, m)


def load_representation(path: str, g: LieAlgebra) -> Representation:
    with open(path, encoding="utf-8") as fh:
        return representation_from_json(fh.read(), g)
