"""Command-line front end; deterministic, scriptable output.

Results go to stdout, diagnostics to stderr with an ``error:`` prefix.
Exit codes: 0 success, 1 domain error (bad path, non-member input to a
mapping), 2 usage error (including the enumeration safety cap, default 20,
raised with --force or the RDYCK_MAX_N environment variable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from rdyck.bijection import check_bijection, collision_pair, phi, phi_inv
from rdyck.classes import PathClass, generate, member, oracle_generate
from rdyck.compositions import (
    Composition,
    PartSet,
    comp_to_path,
    enumerate_compositions,
    path_to_comp,
)
from rdyck.core import RationalParam, parse_path, semilength
from rdyck.counting import (
    class_gf,
    compositions_gf,
    count_enumeration,
    count_recurrence,
    quasi_gf,
    rational_gf,
    restricted_gf,
    series_coeffs,
)

__all__ = ["main", "run"]

_DEFAULT_CAP = 20

_CLASSES = {
    "rational": PathClass.RATIONAL,
    "r": PathClass.RATIONAL,
    "restricted": PathClass.RESTRICTED,
    "rt": PathClass.RESTRICTED,
    "quasi": PathClass.QUASI,
    "q": PathClass.QUASI,
}

_GFS = {
    "rational": rational_gf,
    "restricted": restricted_gf,
    "quasi": quasi_gf,
    "compositions": compositions_gf,
}


class _CapExceeded(Exception):
    pass


def _cap() -> int:
    raw = os.environ.get("RDYCK_MAX_N", "")
    if not raw:
        return _DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise _CapExceeded(f"RDYCK_MAX_N is not an integer: {raw!r}") from None


def _ensure_cap(n: int, force: bool) -> None:
    cap = _cap()
    if n > cap and not force:
        raise _CapExceeded(
            f"n={n} exceeds the enumeration safety cap ({cap}); pass --force or raise RDYCK_MAX_N"
        )


def _q(args: argparse.Namespace) -> RationalParam:
    return RationalParam.from_string(args.q)


def _cmd_member(args: argparse.Namespace) -> int:
    verdict = member(_q(args), _CLASSES[args.path_class], parse_path(args.path))
    print("true" if verdict else "false")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise ValueError(f"n must be >= 0, got {args.n}")
    _ensure_cap(args.n, args.force)
    paths = generate(_q(args), _CLASSES[args.path_class], args.n)
    if args.format == "json":
        print(json.dumps([p.steps for p in paths]))
    else:
        for p in paths:
            print(p.steps)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {args.nmax}")
    q = _q(args)
    path_class = _CLASSES[args.path_class]
    methods = ["enumeration", "recurrence", "series"] if args.all_methods else [args.method]
    tables = {}
    for method in methods:
        if method == "enumeration":
            _ensure_cap(args.nmax, args.force)
            tables[method] = count_enumeration(q, path_class, args.nmax)
        elif method == "recurrence":
            tables[method] = count_recurrence(q, path_class, args.nmax)
        else:
            tables[method] = series_coeffs(class_gf(q, path_class), args.nmax)
    if args.format == "json":
        if args.all_methods:
            print(json.dumps({m: list(t.values) for m, t in tables.items()}))
        else:
            print(json.dumps(list(tables[methods[0]].values)))
    else:
        for method in methods:
            print(tables[method].as_line())
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    if args.nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {args.nmax}")
    table = series_coeffs(_GFS[args.gf](_q(args)), args.nmax)
    if args.format == "json":
        print(json.dumps(list(table.values)))
    else:
        print(table.as_line())
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    q = _q(args)
    if args.direction == "comp2path":
        print(comp_to_path(q, Composition.from_text(args.value)).steps)
    else:
        print(path_to_comp(q, parse_path(args.value)).to_text())
    return 0


def _cmd_phi(args: argparse.Namespace) -> int:
    print(phi(_q(args), parse_path(args.path)).steps)
    return 0


def _cmd_phi_inv(args: argparse.Namespace) -> int:
    print(phi_inv(_q(args), parse_path(args.path)).steps)
    return 0


def _cmd_check_bijection(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise ValueError(f"n must be >= 0, got {args.n}")
    _ensure_cap(args.n, args.force)
    report = check_bijection(_q(args), args.n)
    print(
        f"q={report.q} n={report.n} t={report.t} "
        f"domain={report.card_domain} codomain={report.card_codomain} "
        f"injective={'true' if report.injective else 'false'} "
        f"surjective={'true' if report.surjective else 'false'} "
        f"collisions={len(report.collisions)}"
    )
    for left, right in report.collisions:
        print(f"collision: {left.steps} {right.steps}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {args.nmax}")
    _ensure_cap(args.nmax, args.force)
    q = _q(args)
    nmax = args.nmax
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        if ok:
            print(f"ok {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")

    for path_class in PathClass:
        detail = ""
        for n in range(nmax + 1):
            built = generate(q, path_class, n)
            checked = oracle_generate(q, path_class, n)
            if built != checked:
                missing = [p.steps for p in checked if p not in set(built)]
                extra = [p.steps for p in built if p not in set(checked)]
                detail = f"n={n} missing={missing} extra={extra}"
                break
        report(f"generation {path_class.value}", not detail, detail)

        enum = count_enumeration(q, path_class, nmax)
        rec = count_recurrence(q, path_class, nmax)
        ser = series_coeffs(class_gf(q, path_class), nmax)
        agree = enum.values == rec.values == ser.values
        report(
            f"counts {path_class.value}",
            agree,
            f"enumeration={enum.as_line()} recurrence={rec.as_line()} series={ser.as_line()}",
        )

    detail = ""
    for n in range(nmax + 1):
        meet = set(generate(q, PathClass.RATIONAL, n)) & set(generate(q, PathClass.QUASI, n))
        expected = set(generate(q, PathClass.RESTRICTED, n))
        if meet != expected:
            witnesses = sorted(p.steps for p in meet ^ expected)
            detail = f"n={n} witnesses={witnesses}"
            break
    report("intersection", not detail, detail)

    for finite, label in ((False, "unbounded"), (True, "bounded")):
        part_set = PartSet(q, finite)
        path_class = PathClass.RESTRICTED if finite else PathClass.RATIONAL
        detail = ""
        for n in range(nmax):
            comps = enumerate_compositions(part_set, n)
            paths = generate(q, path_class, n + 1)
            if len(comps) != len(paths):
                detail = f"n={n} compositions={len(comps)} paths={len(paths)}"
                break
            bad = next((c for c in comps if path_to_comp(q, comp_to_path(q, c)) != c), None)
            if bad is not None:
                detail = f"n={n} composition={bad.to_text()}"
                break
            bad = next((p for p in paths if comp_to_path(q, path_to_comp(q, p)) != p), None)
            if bad is not None:
                detail = f"n={n} path={bad.steps}"
                break
        report(f"compositions {label}", not detail, detail)

    t = (q.s - 1) // q.r
    if q.s == t * q.r + 1:
        detail = ""
        for n in range(max(0, nmax - t - 1) + 1):
            rep = check_bijection(q, n)
            if not (rep.injective and rep.surjective and rep.card_domain == rep.card_codomain):
                detail = f"n={n} domain={rep.card_domain} codomain={rep.card_codomain}"
                break
            bad = next(
                (p for p in generate(q, PathClass.QUASI, n) if phi_inv(q, phi(q, p)) != p),
                None,
            )
            if bad is not None:
                detail = f"n={n} path={bad.steps}"
                break
            bad = next(
                (p for p in generate(q, PathClass.RESTRICTED, n + t + 1) if phi(q, phi_inv(q, p)) != p),
                None,
            )
            if bad is not None:
                detail = f"n={n} image={bad.steps}"
                break
        report("bijection", not detail, detail)
    else:
        try:
            left, right = collision_pair(q)
            pair_detail = f"pair {left.steps} {right.steps} does not shift the counts"
            witness = semilength(left)
            pair_ok = True
        except RuntimeError as exc:
            pair_detail = str(exc)
            witness = 0
            pair_ok = False
        # counts must split no later than the collision's own semilength
        bound = max(nmax, witness)
        quasi_counts = count_recurrence(q, PathClass.QUASI, bound)
        restricted_counts = count_recurrence(q, PathClass.RESTRICTED, bound + t + 1)
        differs = any(quasi_counts[n] != restricted_counts[n + t + 1] for n in range(bound + 1))
        report("collisions", differs and pair_ok, pair_detail)

    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdyck",
        description="Exact enumeration of height-two Dyck path families driven by a rational parameter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_q(p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", required=True, metavar="R/S", help="rational parameter, e.g. 3/4")

    def add_class(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--class",
            dest="path_class",
            required=True,
            choices=sorted(_CLASSES),
            help="path family (r/rt/q abbreviate rational/restricted/quasi)",
        )

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("lines", "json"), default="lines")

    p = sub.add_parser("member", help="test membership of a path in a family")
    add_class(p)
    add_q(p)
    p.add_argument("path", help="path as U/D text; '' is the empty path")
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("enumerate", help="list every member of one semilength")
    add_class(p)
    add_q(p)
    p.add_argument("--n", type=int, required=True, help="semilength")
    add_format(p)
    p.add_argument("--force", action="store_true", help="override the safety cap")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", help="count members for semilengths 0..nmax")
    add_class(p)
    add_q(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "series", "enumeration"), default="recurrence")
    p.add_argument("--all-methods", action="store_true", help="print all three methods")
    add_format(p)
    p.add_argument("--force", action="store_true", help="override the safety cap")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("series", help="expand one of the closed-form generating functions")
    add_q(p)
    p.add_argument("--gf", choices=sorted(_GFS), required=True)
    p.add_argument("--nmax", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("map", help="convert between compositions and paths")
    p.add_argument("direction", choices=("comp2path", "path2comp"))
    add_q(p)
    p.add_argument("value", help="composition like 1+3+1 (0 for empty) or path text")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("phi", help="apply the semilength-raising map to a quasi member")
    add_q(p)
    p.add_argument("path")
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("phi-inv", help="apply the inverse map to a restricted member")
    add_q(p)
    p.add_argument("path")
    p.set_defaults(handler=_cmd_phi_inv)

    p = sub.add_parser("check-bijection", help="report injectivity/surjectivity at one semilength")
    add_q(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true", help="override the safety cap")
    p.set_defaults(handler=_cmd_check_bijection)

    p = sub.add_parser("verify", help="run every cross-check up to a semilength; exit 0 iff all pass")
    add_q(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--force", action="store_true", help="override the safety cap")
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, execute, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())
