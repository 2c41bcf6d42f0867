"""``lie5`` command-line front end.

Exit codes: 0 success, 1 failed checks (verify-paper only), 2 invalid input
or domain error, 3 not in catalog, 64 usage error. With ``--json`` every
command prints a report ``{"command", "input_digest", "results",
"exit_status"}``; output never contains timestamps, so identical invocations
give identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import catalog
from .cohomology import cohomology_dim
from .derivations import derivation_algebra
from .intervals import Interval
from .jsonio import FormatError, algebra_to_dict, dumps, load_algebra, matrix_to_json, representation_from_json
from .lattices import IntQuartic, LatticeError, NumberFieldData, admissible_quartic, dirichlet_certificate
from .liealg import JacobiError, LieError
from .qlinalg import Poly, QMat, format_rat, parse_rat

__all__ = ["main", "build_parser", "parse_poly", "EXIT_OK", "EXIT_FAILED", "EXIT_INVALID", "EXIT_NOT_IN_CATALOG", "EXIT_USAGE"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_NOT_IN_CATALOG = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# rendering


class _Render:
    def __init__(self, approx: int | None):
        self.approx = approx

    def rat(self, x) -> str:
        x = Fraction(x)
        if self.approx is None:
            return format_rat(x)
        with localcontext() as ctx:
            ctx.prec = self.approx + 30
            d = Decimal(x.numerator) / Decimal(x.denominator)
            return f"{d:.{self.approx}f}"

    def interval(self, iv: Interval) -> list:
        return [self.rat(iv.lo), self.rat(iv.hi)]

    def matrix(self, m: QMat) -> list:
        if self.approx is None:
            return matrix_to_json(m)
        return [[self.rat(x) for x in m.row(i)] for i in range(m.rows)]

    def matrix_text(self, m: QMat) -> str:
        return "[" + ", ".join("[" + ", ".join(row) + "]" for row in self.matrix(m)) + "]"


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*([a-z])(?:\s*\^\s*(\d+))?)?\s*")


def parse_poly(text: str) -> Poly:
    """Parse ``"x^3 - 3x + 1"``, ``"1-a"`` and similar single-variable integer/rational polynomials."""
    s = text.strip()
    if not s:
        raise FormatError(f"empty polynomial {text!r}")
    pos = 0
    coeffs: dict[int, Fraction] = {}
    var = None
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise FormatError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        sign, num, mono, name, exp = m.groups()
        if not first and not sign:
            raise FormatError(f"missing operator in polynomial {text!r} at column {pos + 1}")
        if num is None and mono is None:
            raise FormatError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        if name is not None:
            if var is not None and name != var:
                raise FormatError(f"polynomial {text!r} uses more than one variable")
            var = name
        c = parse_rat(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        deg = (int(exp) if exp else 1) if mono else 0
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
        pos = m.end()
        first = False
    top = max(coeffs) if coeffs else 0
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])


# ---------------------------------------------------------------------------
# commands; each returns (exit status, results, text lines, input digests)


def _cmd_identify(args, r: _Render):
    raw = _read(args.file)
    digests = {"algebra": _digest(raw)}
    try:
        g = load_algebra(args.file)
    except JacobiError as exc:
        res = {"status": "invalid", "error": "JacobiFailure", "witness": list(exc.failure.triple), "message": str(exc)}
        return EXIT_INVALID, res, [f"invalid algebra: {exc}", f"JacobiFailure witness (1-based): {exc.failure.triple}"], digests
    res = catalog.identify(g)
    out = res.to_json()
    lines = []
    if res.ok:
        lines.append(f"{res.name}    (Patera: {res.patera_name})")
        if res.params:
            lines.append("params: " + ", ".join(f"{k}={r.rat(v)}" for k, v in res.params.items()))
    else:
        lines.append(f"NotInCatalog({res.reason})" + (f": {res.detail}" if res.detail else ""))
    lines.append("trace: " + (" → ".join(res.trace) if res.trace else "(none)"))
    if res.fingerprint is not None:
        for k, v in res.fingerprint.to_json().items():
            lines.append(f"  {k}: {v}")
    return (EXIT_OK if res.ok else EXIT_NOT_IN_CATALOG), out, lines, digests


def _cmd_verify(args, r: _Render):
    from .checks import run_checks

    only = None
    if args.only:
        only = [x for item in args.only for x in item.split(",") if x]
    try:
        results = run_checks(only)
    except KeyError as exc:
        raise UsageError(f"unknown check id or group: {exc.args[0]}") from None
    passed = sum(1 for x in results if x.passed)
    lines = []
    width = max((len(x.id) for x in results), default=0)
    for x in results:
        lines.append(f"{'PASS' if x.passed else 'FAIL'}  {x.id:<{width}}  {x.title}" + (f"  [{x.detail}]" if x.detail else ""))
    lines.append(f"{passed}/{len(results)} checks passed")
    res = {"checks": [x.to_json() for x in results], "passed": passed, "total": len(results)}
    return (EXIT_OK if passed == len(results) else EXIT_FAILED), res, lines, {}


def _parse_params(items: Sequence[str] | None) -> dict:
    params = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"parameter {item!r} must look like name=value")
        k, v = item.split("=", 1)
        try:
            params[k.strip()] = parse_rat(v)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"parameter {k} has non-rational value {v!r}") from None
    return params


def _cmd_catalog(args, r: _Render):
    if args.action == "list":
        rows = [{"name": x.name, "patera_name": x.patera_name, "params": list(x.param_names)} for x in catalog.list_geometries()]
        lines = [f"{x['name']:<24} {x['patera_name']}" + (f"  params {', '.join(x['params'])}" if x["params"] else "") for x in rows]
        return EXIT_OK, {"geometries": rows}, lines, {}
    if args.action == "export":
        data = catalog.export_catalog()
        return EXIT_OK, data, dumps(data).rstrip("\n").split("\n"), {}
    # emit
    if not args.name:
        raise UsageError("catalog emit needs a geometry name")
    try:
        rec = catalog.get_record(args.name)
    except catalog.UnknownGeometry as exc:
        return EXIT_NOT_IN_CATALOG, {"status": "NotInCatalog", "error": "UnknownGeometry", "message": str(exc)}, [str(exc)], {}
    params = _parse_params(args.param)
    g = rec.emit(**params)
    data = algebra_to_dict(g)
    if rec.param_names:
        merged = {**rec.default_params, **params}
        data["params"] = {k: format_rat(merged[k]) for k in rec.param_names}
    text = dumps(data)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK, {"algebra": json.loads(text)}, None if args.output else text, {}


def _cmd_lattice(args, r: _Render):
    if args.action == "check-poly":
        vals = []
        for x in args.coeffs:
            try:
                vals.append(int(x))
            except ValueError:
                raise FormatError(f"coefficient {x!r} is not an integer") from None
        q = IntQuartic(*vals)
        rep = admissible_quartic(q)
        res = {"poly": str(q.poly()), "admissible": rep.admissible, "reasons": list(rep.reasons)}
        lines = [f"{q.poly()}: {'admissible' if rep.admissible else 'not admissible'}"] + [f"  {x}" for x in rep.reasons]
        return EXIT_OK, res, lines, {}
    # dirichlet
    cubic, u1, u2 = (parse_poly(x) for x in args.polys)
    nf = NumberFieldData(cubic)
    cert = dirichlet_certificate(nf, u1, u2)
    res = {
        "field": str(cubic),
        "units": [str(u1), str(u2)],
        "unit_matrices": [r.matrix(m) for m in cert.unit_matrices],
        "holonomy": [r.matrix(m) for m in cert.presentation.holonomy],
        "log_embeddings": [[r.interval(iv) for iv in vec] for vec in cert.log_vectors],
        "certifying_minor": list(cert.minor),
        "minor_enclosure": r.interval(cert.minor_enclosure),
        "kind": cert.presentation.kind,
    }
    lines = [f"Z[α] for α a root of {cubic}"]
    for name, m in zip(("u1", "u2"), cert.unit_matrices):
        lines.append(f"{name} acts by {r.matrix_text(m)}")
    for name, m in zip(("u1^2", "u2^2"), cert.presentation.holonomy):
        lines.append(f"holonomy {name}: {r.matrix_text(m)}")
    for name, vec in zip(("u1", "u2"), cert.log_vectors):
        lines.append(f"log embedding of {name}: " + ", ".join(f"[{a}, {b}]" for a, b in (r.interval(iv) for iv in vec)))
    lo, hi = r.interval(cert.minor_enclosure)
    lines.append(f"independent: minor {cert.minor} in [{lo}, {hi}]")
    return EXIT_OK, res, lines, {}


def _cmd_cohomology(args, r: _Render):
    raw = _read(args.file)
    rep_raw = _read(args.rep)
    digests = {"algebra": _digest(raw), "representation": _digest(rep_raw)}
    g = load_algebra(args.file)
    rep = representation_from_json(rep_raw.decode("utf-8"), g)
    if not 0 <= args.degree <= g.dim:
        raise FormatError(f"degree must satisfy 0 <= p <= {g.dim}")
    d = cohomology_dim(g, rep, args.degree)
    return EXIT_OK, {"degree": args.degree, "dim": d}, [f"dim H^{args.degree} = {d}"], digests


def _cmd_derivations(args, r: _Render):
    raw = _read(args.file)
    g = load_algebra(args.file)
    ds = derivation_algebra(g)
    res = {
        "der_dim": ds.dim,
        "inner_dim": ds.inner.dim,
        "traceless_dim": ds.traceless.dim,
        "out_dim": ds.out_dim,
        "sout_dim": ds.sout_dim,
        "sout_representatives": [r.matrix(m) for m in ds.sout_representatives],
    }
    lines = [f"dim Der = {ds.dim}", f"dim ad(g) = {ds.inner.dim}", f"dim Out = {ds.out_dim}", f"dim sout = {ds.sout_dim}"]
    for m in ds.sout_representatives:
        lines.append(f"  {r.matrix_text(m)}")
    return EXIT_OK, res, lines, {"algebra": _digest(raw)}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lie5", description="Exact tools for five-dimensional solvable Lie algebras and their geometries.")
    p.add_argument("--approx", type=int, metavar="N", help="render rationals as decimals with N digits")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("identify", help="run the identification key on an algebra file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify-paper", help="replay the classification checks")
    s.add_argument("--only", action="append", metavar="IDS", help="comma-separated check ids or groups")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("catalog", help="list, emit or export catalog geometries")
    s.add_argument("action", choices=("list", "emit", "export"))
    s.add_argument("name", nargs="?")
    s.add_argument("--param", nargs="+", action="extend", metavar="NAME=VALUE")
    s.add_argument("--output", "-o")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("lattice", help="lattice certificates")
    lsub = s.add_subparsers(dest="action", parser_class=_Parser)
    c = lsub.add_parser("check-poly", help="is x^4 + a x^3 + b x^2 + c x + 1 admissible?")
    c.add_argument("coeffs", nargs=3, metavar="INT")
    c.add_argument("--json", action="store_true")
    d = lsub.add_parser("dirichlet", help="Z^3 x| Z^2 lattice from a totally real cubic and two units")
    d.add_argument("polys", nargs=3, metavar=("CUBIC", "U1", "U2"))
    d.add_argument("--json", action="store_true")

    s = sub.add_parser("cohomology", help="dimension of H^p(g; M)")
    s.add_argument("file")
    s.add_argument("--rep", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("derivations", help="derivation algebra and outer classes")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    return p


_COMMANDS = {
    "identify": _cmd_identify,
    "verify-paper": _cmd_verify,
    "catalog": _cmd_catalog,
    "lattice": _cmd_lattice,
    "cohomology": _cmd_cohomology,
    "derivations": _cmd_derivations,
}


def _emit(text: str, stream) -> None:
    stream.write(text if text.endswith("\n") else text + "\n")


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None or (args.command == "lattice" and args.action is None):
            raise UsageError("lie5: error: a subcommand is required")
        if args.approx is not None and args.approx < 0:
            raise UsageError("lie5: error: --approx needs a non-negative digit count")
    except UsageError as exc:
        parser.print_usage(stderr)
        _emit(str(exc), stderr)
        return EXIT_USAGE
    render = _Render(args.approx)
    as_json = getattr(args, "json", False)
    digests: dict = {}
    try:
        status, results, lines, digests = _COMMANDS[args.command](args, render)
    except UsageError as exc:
        _emit(str(exc), stderr)
        return EXIT_USAGE
    except FormatError as exc:
        status, results, lines = EXIT_INVALID, _error_result("FormatError", exc, line=exc.line, col=exc.col), [f"invalid input: {exc}"]
    except JacobiError as exc:
        status = EXIT_INVALID
        results = _error_result("JacobiFailure", exc, witness=list(exc.failure.triple))
        lines = [f"invalid algebra: {exc}"]
    except (LieError, LatticeError, ValueError, ZeroDivisionError) as exc:
        status, results, lines = EXIT_INVALID, _error_result(type(exc).__name__, exc), [f"error: {exc}"]
    except OSError as exc:
        status, results, lines = EXIT_INVALID, _error_result("IOError", exc), [f"cannot read input: {exc.strerror}: {exc.filename}"]
    if as_json:
        report = {"command": argv, "input_digest": digests or None, "results": results, "exit_status": status}
        stdout.write(dumps(report))
    elif lines is not None:
        out = stdout if status in (EXIT_OK, EXIT_FAILED, EXIT_NOT_IN_CATALOG) else stderr
        if isinstance(lines, str):
            out.write(lines)
        else:
            _emit("\n".join(lines), out)
    return status


def _error_result(kind: str, exc: Exception, **extra) -> dict:
    out = {"status": "invalid", "error": kind, "message": str(exc)}
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
