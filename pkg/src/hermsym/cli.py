"""Command-line frontend: ``hermsym <subcommand> --type B --rank 3 ...``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import checks
from . import locsys as L
from . import orbits as O
from .poset import hasse_matrix
from .rootsys import setting
from .serialize import SCHEMA_VERSION, dumps, relation_json, to_dot

CACHE_ENV = "HERMSYM_CACHE"
DEFAULT_CACHE = Path.home() / ".cache" / "hermsym"
ORACLE_LIMIT = 1000


class CLIError(Exception):
    pass


def cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    if value == "":
        return None
    return Path(value) if value else DEFAULT_CACHE


def cache_key(par, order: str, method: str) -> str:
    return f"{par.system.label}:{par.node}:{order}:{method}:{SCHEMA_VERSION}"


def _cache_path(key: str) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    return root / (key.replace(":", "_") + ".json")


def _cached(key: str, compute, use_cache: bool) -> str:
    path = _cache_path(key) if use_cache else None
    if path is not None and path.exists():
        return path.read_text()
    text = compute()
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text)
        tmp.replace(path)
    return text


def _parabolic(args):
    try:
        return setting(args.type, args.rank, args.node)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _elements(par, order: str):
    return L.enumerate_D(par) if order == "gorder" else O.enumerate_pairs(par)


def _relation(par, order: str, method: str) -> np.ndarray:
    if order == "bruhat":
        rel = O.closed_order(par) if method == "closed" else O.standard_order_oracle(par)
        return rel.leq
    if method == "closed":
        return L.closed_gorder_matrix(par)
    return L.gorder_fixpoint(par).leq


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _guard(par, order: str, method: str):
    n = len(_elements(par, order))
    if method in ("oracle", "both") and n > ORACLE_LIMIT:
        raise CLIError(f"oracle limited to {ORACLE_LIMIT} elements; {par.label} has {n}")
    if order == "gorder" and method in ("closed", "both") and par.system.type_label == "C":
        raise CLIError("no closed form; use oracle")


def _offer_components(par, out: str | None):
    comps = L.gorder_components_C(par)
    text = dumps({"schema": SCHEMA_VERSION, "system": par.label,
                  "reduced_form_classes": comps})
    if out:
        path = out + ".components.json"
        Path(path).write_text(text)
        return f"reduced-form classes written to {path}"
    return "reduced-form classes are available with: hasse --order gorder --method oracle"


def cmd_enumerate(args) -> int:
    par = _parabolic(args)
    elems = _elements(par, args.order)
    _emit(dumps(relation_json(par.label, args.order, "enumerate", elems, [])), args.out)
    return 0


def _order_text(par, order: str, method: str, with_leq: bool) -> str:
    elems = _elements(par, order)
    if method == "both":
        A = _relation(par, order, "closed")
        B = _relation(par, order, "oracle")
        diffs = [[int(i), int(j), bool(A[i, j]), bool(B[i, j])] for i, j in zip(*np.nonzero(A != B))]
        body = relation_json(par.label, order, method, elems,
                             zip(*np.nonzero(hasse_matrix(B))))
        body["agree"] = not diffs
        body["diffs"] = diffs
        return dumps(body)
    R = _relation(par, order, method)
    strict = R & ~np.eye(len(R), dtype=bool)
    leq = zip(*np.nonzero(strict)) if with_leq else None
    return dumps(relation_json(par.label, order, method, elems,
                               zip(*np.nonzero(hasse_matrix(R))), leq))


def cmd_order(args) -> int:
    par = _parabolic(args)
    try:
        _guard(par, args.order, args.method)
    except CLIError as exc:
        if str(exc).startswith("no closed form"):
            raise CLIError(f"{exc}; {_offer_components(par, args.out)}") from None
        raise
    key = cache_key(par, args.order, args.method) + ":order"
    text = _cached(key, lambda: _order_text(par, args.order, args.method, True), not args.no_cache)
    _emit(text, args.out)
    if args.method == "both" and '"agree": false' in text:
        return 1
    return 0


def cmd_hasse(args) -> int:
    par = _parabolic(args)
    method = "oracle" if args.method == "both" else args.method
    try:
        _guard(par, args.order, method)
    except CLIError as exc:
        if str(exc).startswith("no closed form"):
            raise CLIError(f"{exc}; {_offer_components(par, args.out)}") from None
        raise
    elems = _elements(par, args.order)

    def compute():
        R = _relation(par, args.order, method)
        edges = list(zip(*np.nonzero(hasse_matrix(R))))
        if args.format == "dot":
            comps = L.gorder_hasse_components(par) if args.order == "gorder" else None
            return to_dot(elems, edges, comps)
        return dumps(relation_json(par.label, args.order, method, elems, edges))

    key = cache_key(par, args.order, method) + f":hasse-{args.format}"
    _emit(_cached(key, compute, not args.no_cache), args.out)
    return 0


def cmd_locsys_count(args) -> int:
    par = _parabolic(args)
    rows = []
    agree = True
    for p in O.enumerate_pairs(par):
        c, t = L.count_local_systems_closed(p), L.count_local_systems_lattice(p)
        agree &= c == t
        rows.append({"v": list(p.v.inversion_set), "s": list(p.s), "closed": c, "lattice": t})
    _emit(dumps({"schema": SCHEMA_VERSION, "system": par.label, "agree": agree,
                 "total": sum(r["closed"] for r in rows), "orbits": rows}), args.out)
    return 0 if agree else 1


def cmd_check(args) -> int:
    try:
        results = checks.run_suite(args.suite)
    except KeyError:
        raise CLIError(f"unknown suite {args.suite!r}; choose from all, "
                       + ", ".join(checks.SUITES)) from None
    failed = 0
    for r in results:
        print(r.line())
        if not r.passed:
            failed += 1
            for d in r.diffs:
                print(f"    diff: {d}")
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p, order=True, method=True):
        p.add_argument("--type", required=True, help="A, B, C, D, E6 or E7")
        p.add_argument("--rank", type=int, help="rank (implied for E6/E7)")
        p.add_argument("--node", type=int, help="1-based cominuscule node")
        if order:
            p.add_argument("--order", choices=("bruhat", "gorder"), default="bruhat")
        if method:
            p.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--no-cache", action="store_true", help=f"ignore ${CACHE_ENV}")

    p = sub.add_parser("enumerate", help="list orbits, or D elements with --order gorder")
    system_args(p, method=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("order", help="full order relation")
    system_args(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("hasse", help="Hasse diagram as JSON or DOT")
    system_args(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("locsys-count", help="local-system counts, closed form and lattice")
    system_args(p, order=False, method=False)
    p.set_defaults(func=cmd_locsys_count)

    p = sub.add_parser("check", help="run acceptance criteria")
    p.add_argument("suite", nargs="?", default="all",
                   help="all, orders, locsys or sequences")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"hermsym: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
