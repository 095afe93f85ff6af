"""Command-line front end.

Subcommands::

    affinecox poly --family F4 --which coxeter
    affinecox exponents --family A --rank 5 --class 3
    affinecox table --which 2 --max-rank 8 --format json
    affinecox verify --max-rank 12 --suite threeway --suite defect

Exit codes: 0 success, 1 a cross-check or verification failed, 2 bad usage
or a domain error (reported as ``{"error": ..., "message": ...}``).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .coxeter import (
    ExponentData,
    affine_exponents,
    coxeter_polynomial,
    exponents_from_polynomial,
)
from .errors import AffineCoxError
from .polyalgebra import CyclotomicFactorization, Poly, factor_cyclotomic
from .rootdata import CLASSICAL, DiagramId
from .spectra import bundle_from_closed_form, bundle_from_determinants
from .tables import table1_rows, table2_rows, table3_rows
from .verify import SUITES, run_suites
from .weights import blm_expansion, blm_exponents, steinberg_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(AffineCoxError, ValueError):
    pass


# ---------------------------------------------------------------------------
# serialization


def poly_json(p: Poly) -> list[str]:
    """Ascending coefficients as decimal strings."""
    return [str(c) for c in p.coeffs]


def poly_from_json(coeffs: Sequence[str]) -> Poly:
    return Poly(int(c) for c in coeffs)


def factors_json(f: CyclotomicFactorization) -> list[list[int]]:
    return [[d, m] for d, m in f.factors]


def exponents_json(e: ExponentData) -> dict:
    return {"h": e.h, "exponents": list(e.exponents)}


def request_json(id: DiagramId, class_index=None, **extra) -> dict:
    out = {"family": id.family, "rank": id.rank, "affine": id.affine, "class": class_index}
    out.update(extra)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def _diagram(args) -> DiagramId:
    if args.family is None:
        raise UsageError("--family is required")
    return DiagramId(args.family, args.rank or 0, affine=args.affine)


def cmd_poly(args) -> tuple[dict, bool]:
    id = _diagram(args)
    which = args.which or "p"
    if args.branch is not None:
        raise UsageError("--branch applies to the exponents command only")
    if which not in ("p", "q", "a", "Q", "coxeter"):
        raise UsageError(f"--which must be one of p, q, a, Q, coxeter for poly, got {which!r}")
    payload: dict = {}
    checks: dict[str, bool] = {}
    if which == "coxeter":
        f = coxeter_polynomial(id, args.class_index)
        payload["polynomial"] = poly_json(f)
        payload["text"] = str(f)
        fac = factor_cyclotomic(f)
        payload["factors"] = factors_json(fac)
        checks["cyclotomic-expansion"] = fac.expand() == f
        primary = "reflection-product"
    else:
        if args.class_index is not None:
            raise UsageError("--class applies to --which coxeter only")
        b = bundle_from_determinants(id)
        p = getattr(b, which)
        payload["polynomial"] = poly_json(p)
        payload["text"] = str(p)
        if id.affine and id.family in CLASSICAL:
            checks["chebyshev-closed-form"] = getattr(bundle_from_closed_form(id), which) == p
        primary = "exact-determinant"
    record = {
        "request": request_json(id, args.class_index, which=which),
        "payload": payload,
        "methods": {"primary": primary, "checks": checks},
    }
    return record, all(checks.values())


def cmd_exponents(args) -> tuple[dict, bool]:
    id = _diagram(args)
    if not id.affine:
        raise UsageError("affine exponents are defined for affine diagrams; drop --finite")
    branch = args.branch if args.branch is not None else (args.class_index if id.family == "A" else None)
    cox = affine_exponents(id, args.class_index)
    exp = blm_expansion(id, branch)
    blm = blm_exponents(exp)
    stein = exponents_from_polynomial(steinberg_polynomial(id, branch))
    record = {
        "request": request_json(id, args.class_index, branch=branch),
        "payload": {
            "exponents": exponents_json(cox),
            "coweight": {"branch": exp.branch, "c": exp.c, "m": list(exp.m)},
        },
        "methods": {
            "primary": "coxeter-factorization",
            "checks": {"coweight": blm == cox, "branch-deletion": stein == cox},
        },
    }
    return record, blm == cox == stein


def _table_rows(which: int, max_rank: int):
    if which == 1:
        for row in table1_rows(max_rank):
            cox = affine_exponents(row.id, row.class_index)
            blm = blm_exponents(blm_expansion(row.id, row.class_index))
            stein = exponents_from_polynomial(steinberg_polynomial(row.id, row.class_index))
            yield row, {"exponents": exponents_json(cox)}, cox == blm == stein
    else:
        rows = table2_rows(max_rank) if which == 2 else table3_rows(max_rank)
        for row in rows:
            f = coxeter_polynomial(row.id, row.class_index)
            fac = factor_cyclotomic(f)
            yield row, {"polynomial": poly_json(f), "factors": factors_json(fac)}, fac.expand() == f


TABLE_METHODS = {
    1: {"primary": "coxeter-factorization", "checks": ["coweight", "branch-deletion"]},
    2: {"primary": "reflection-product", "checks": ["cyclotomic-expansion"]},
    3: {"primary": "reflection-product", "checks": ["cyclotomic-expansion"]},
}


def cmd_table(args) -> tuple[dict, bool]:
    try:
        which = int(args.which)
    except (TypeError, ValueError):
        raise UsageError(f"--which must be 1, 2 or 3 for table, got {args.which!r}") from None
    if which not in (1, 2, 3):
        raise UsageError(f"--which must be 1, 2 or 3 for table, got {which}")
    max_rank = args.max_rank if args.max_rank is not None else 8
    if max_rank < 1:
        raise UsageError("--max-rank must be at least 1")
    rows, ok = [], True
    for row, payload, agree in _table_rows(which, max_rank):
        rows.append({"request": request_json(row.id, row.class_index), "payload": payload})
        ok = ok and agree
    record = {"table": which, "max_rank": max_rank, "methods": TABLE_METHODS[which], "rows": rows}
    return record, ok


def cmd_verify(args) -> tuple[dict, bool]:
    max_rank = args.max_rank if args.max_rank is not None else 12
    unknown = sorted(set(args.suite or ()) - set(SUITES))
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
    results = run_suites(max_rank, args.suite)
    suites = [
        {"name": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures}
        for r in results
    ]
    ok = all(r.ok for r in results)
    return {"max_rank": max_rank, "suites": suites, "ok": ok}, ok


# ---------------------------------------------------------------------------
# text rendering


def _factors_text(pairs) -> str:
    return str(CyclotomicFactorization(tuple(tuple(p) for p in pairs)))


def _row_name(req: dict) -> str:
    id = DiagramId(req["family"], req["rank"], req["affine"])
    return id.name + (f" j={req['class']}" if req.get("class") is not None else "")


def render_text(command: str, record: dict) -> str:
    lines = []
    if command == "poly":
        req, pay = record["request"], record["payload"]
        lines.append(f"{_row_name(req)} {req['which']}: {pay['text']}")
        if "factors" in pay:
            lines.append(f"factors: {_factors_text(pay['factors'])}")
    elif command == "exponents":
        pay = record["payload"]
        e, cw = pay["exponents"], pay["coweight"]
        lines.append(f"{_row_name(record['request'])}: h={e['h']} exponents={e['exponents']}")
        lines.append(f"coweight at vertex {cw['branch']}: c={cw['c']} m={cw['m']}")
    elif command == "table":
        body = []
        for row in record["rows"]:
            pay = row["payload"]
            if "exponents" in pay:
                cols = (str(pay["exponents"]["h"]), " ".join(map(str, pay["exponents"]["exponents"])))
            else:
                cols = (str(poly_from_json(pay["polynomial"])), _factors_text(pay["factors"]))
            body.append((_row_name(row["request"]),) + cols)
        widths = [max(len(r[i]) for r in body) for i in range(2)] if body else [0, 0]
        for r in body:
            lines.append(f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]}".rstrip())
    else:
        for s in record["suites"]:
            status = "ok" if s["failed"] == 0 else "FAIL"
            lines.append(f"{s['name']:<13} {s['passed']:>4} passed {s['failed']:>4} failed  {status}")
            lines.extend(f"    failed: {f}" for f in s["failures"])
    if command != "verify" and "methods" in record:
        checks = record["methods"]["checks"]
        if isinstance(checks, dict):
            bad = [k for k, v in checks.items() if not v]
            if bad:
                lines.append(f"check failed: {', '.join(bad)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinecox",
        description="Coxeter polynomials, affine exponents and Coxeter numbers of affine Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    diagram = argparse.ArgumentParser(add_help=False)
    diagram.add_argument("--family", help="A, B, C, D, E6, E7, E8, F4 or G2")
    diagram.add_argument("--rank", type=int, help="rank (implied for E, F, G)")
    kind = diagram.add_mutually_exclusive_group()
    kind.add_argument("--affine", dest="affine", action="store_true", default=True)
    kind.add_argument("--finite", dest="affine", action="store_false")
    diagram.add_argument("--class", dest="class_index", type=int, help="Coxeter class (affine A only)")
    diagram.add_argument("--branch", type=int, help="branch vertex (finite A only)")

    p = sub.add_parser("poly", parents=[common, diagram], help="one polynomial of a diagram")
    p.add_argument("--which", default="p", help="p, q, a, Q or coxeter")
    sub.add_parser("exponents", parents=[common, diagram], help="affine exponents by three routes")
    t = sub.add_parser("table", parents=[common], help="reproduce a reference table")
    t.add_argument("--which", default="1", help="1 exponents, 2 Coxeter polynomials, 3 A classes")
    t.add_argument("--max-rank", type=int)
    v = sub.add_parser("verify", parents=[common], help="run the cross-verification suites")
    v.add_argument("--max-rank", type=int)
    v.add_argument("--suite", action="append", help=f"repeatable; one of {', '.join(SUITES)}")
    return parser


COMMANDS = {"poly": cmd_poly, "exponents": cmd_exponents, "table": cmd_table, "verify": cmd_verify}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        record, ok = COMMANDS[args.command](args)
    except AffineCoxError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if args.format == "json":
            sys.stdout.write(dumps(err))
        else:
            sys.stderr.write(f"error: {err['error']}: {err['message']}\n")
        return EXIT_USAGE
    text = dumps(record) if args.format == "json" else render_text(args.command, record)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
