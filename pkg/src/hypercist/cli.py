"""Command-line interface.

Exit status: 0 success (condition holds, family accepted); 1 a negative
mathematical result (condition fails, family rejected, destination
unreachable, bound exceeded); 2 usage or data error. Errors are printed to
stderr as a single ``error: <kind>: <message>`` line.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cist import CistFamily, checked, family_stats, verify_definition
from .condition import (
    condition_bipartite,
    condition_regular,
    conjecture_verdict,
    hypercube_condition,
    search_exceptions,
)
from .errors import CistError
from .hypercube import MAX_DIM
from .lift import diameter_bounds, lift_to
from .q7data import q7_family
from .routing import fault_route
from .serialization import (
    parse_family_json,
    render_dot,
    render_edge_list,
    render_family_json,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_family(path: str | None) -> CistFamily:
    if path is None:
        return q7_family()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return parse_family_json(text)
    raise UsageError(f"{path}: family files must be family JSON documents")


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _stats_lines(family: CistFamily) -> list[str]:
    lines = []
    for i, s in enumerate(family_stats(family), start=1):
        center = ",".join(map(str, s.center))
        lines.append(f"T{i}: diameter={s.diameter} internal={s.internal_count} center={{{center}}}")
    return lines


def _stats_payload(family: CistFamily) -> dict:
    return {
        "dim": family.dim,
        "verified": family.accepted,
        "trees": [
            {"diameter": s.diameter, "internal_count": s.internal_count, "center": list(s.center)}
            for s in family_stats(family)
        ],
    }


def cmd_q7(args) -> int:
    family = q7_family()
    if args.out:
        _write(args.out, render_family_json(family))
    _emit(args, _stats_payload(family),
          "\n".join([f"Q7 family: 3 trees, criterion {family.status.value}", *_stats_lines(family)]))
    return OK if family.accepted else NEGATIVE


def cmd_lift(args) -> int:
    if not 1 <= args.to <= MAX_DIM:
        raise UsageError(f"--to must be in [1, {MAX_DIM}]")
    source = checked(_load_family(args.input))
    if not source.accepted:
        print(f"rejected: {source.witness}")
        return NEGATIVE
    family = lift_to(source, args.to)
    if args.out:
        _write(args.out, render_family_json(family))
    diameters = [t.diameter for t in family.trees]
    payload = {"dim": family.dim, "verified": family.accepted, "diameters": diameters,
               "join_history": [list(s) for s in family.history]}
    text = [f"dim {family.dim}: criterion {family.status.value}",
            "diameters: " + ", ".join(map(str, diameters))]
    ok = family.accepted
    if family.k == 3:
        bounds = diameter_bounds(family.dim)
        within = all(d <= b for d, b in zip(diameters, bounds))
        ok = ok and within
        payload["bounds"] = list(bounds)
        payload["within_bounds"] = within
        text[-1] += " bounds: " + "/".join(map(str, bounds)) + (" OK" if within else " EXCEEDED")
    _emit(args, payload, "\n".join(text))
    return OK if ok else NEGATIVE


def cmd_verify(args) -> int:
    family = checked(_load_family(args.input))
    payload = {"dim": family.dim, "criterion": family.status.value,
               "witness": str(family.witness) if family.witness else None}
    text = [f"criterion: {family.status.value}" + (f" ({family.witness})" if family.witness else "")]
    ok = family.accepted
    if args.brute_force:
        violation = verify_definition(family)
        verdict = "accepted" if violation is None else "rejected"
        payload["definition"] = verdict
        payload["definition_witness"] = str(violation) if violation else None
        text.append(f"definition: {verdict}" + (f" ({violation})" if violation else ""))
        ok = ok and violation is None
    _emit(args, payload, "\n".join(text))
    return OK if ok else NEGATIVE


def cmd_check(args) -> int:
    if args.dim is not None:
        if args.dim < 2:
            raise UsageError("--dim must be >= 2")
        report = hypercube_condition(args.dim, bipartite=args.bipartite)
    else:
        if args.k is None or args.vertices is None:
            raise UsageError("check needs --dim N or both --k K and --vertices V")
        fn = condition_bipartite if args.bipartite else condition_regular
        report = fn(args.k, args.vertices)
    rel = "<=" if report.holds else ">"
    _emit(args, report.as_dict(),
          f"{report.variant.value} k={report.k}: lhs={report.lhs} {rel} rhs={report.rhs} "
          f"{'holds' if report.holds else 'fails'}")
    return OK if report.holds else NEGATIVE


def cmd_search(args) -> int:
    if args.limit < 4:
        raise UsageError("--limit must be >= 4")
    found = search_exceptions(args.limit, workers=args.workers)
    _emit(args, {"limit": args.limit, "values": found}, "\n".join(map(str, found)) or "none")
    return OK


def cmd_verdict(args) -> int:
    v = conjecture_verdict(args.dim)
    _emit(args, v.as_dict(), f"n={v.n}: {v.verdict.value} ({v.detail})")
    return OK


def cmd_route(args) -> int:
    family = _load_family(args.input)
    result = fault_route(family, args.src, args.dst, args.fault)
    if result.reachable:
        text = f"T{result.tree + 1}: " + " -> ".join(map(str, result.path))
    else:
        blocked = "; ".join(f"T{i + 1} blocked at {','.join(map(str, v))}"
                            for i, v in result.blocked.items())
        text = f"unreachable: {blocked}"
    _emit(args, result.as_dict(), text)
    return OK if result.reachable else NEGATIVE


def cmd_stats(args) -> int:
    family = checked(_load_family(args.input))
    _emit(args, _stats_payload(family),
          "\n".join([f"dim {family.dim}: criterion {family.status.value}", *_stats_lines(family)]))
    return OK


def cmd_export(args) -> int:
    if args.format == "edges" and args.tree is None:
        family = _load_family(args.input)
        out = Path(args.out)
        for i, t in enumerate(family.trees, start=1):
            _write(str(out.with_name(f"{out.stem}_t{i}{out.suffix}")), render_edge_list(t, f"tree {i}"))
        return OK
    if args.tree is not None:
        family = _load_family(args.input)
        if not 1 <= args.tree <= family.k:
            raise UsageError(f"--tree must be in [1, {family.k}]")
        tree = family.trees[args.tree - 1]
        if args.format == "edges":
            _write(args.out, render_edge_list(tree, f"tree {args.tree}"))
        elif args.format == "dot":
            _write(args.out, render_dot([tree]))
        else:
            raise UsageError("--tree applies to dot and edges formats only")
        return OK
    family = _load_family(args.input)
    _write(args.out, render_dot(family) if args.format == "dot" else render_family_json(family))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercist",
        description="Completely independent spanning trees in hypercubes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q7", help="validate and verify the embedded Q7 family")
    p.add_argument("--out", help="write the family JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_q7)

    p = sub.add_parser("lift", help="lift a family to a higher dimension")
    p.add_argument("--to", type=int, required=True, metavar="N")
    p.add_argument("--in", dest="input", metavar="FILE", help="family JSON (default: embedded Q7)")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="check that a family is a set of CISTs")
    p.add_argument("--in", dest="input", metavar="FILE", required=True)
    p.add_argument("--brute-force", action="store_true",
                   help="also check every vertex pair (dim <= 10)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="evaluate a necessary condition for floor(k/2) CISTs")
    p.add_argument("--dim", type=int, metavar="N", help="hypercube Q_N")
    p.add_argument("--k", type=int, metavar="K", help="regularity")
    p.add_argument("--vertices", type=int, metavar="V", help="vertex count")
    p.add_argument("--bipartite", action="store_true", help="use the bipartite condition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="even m <= L with m/2 dividing 2^(m-1)-1")
    p.add_argument("--limit", type=int, required=True, metavar="L")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verdict", help="classify an even dimension against the conjecture")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("route", help="fault-avoiding route over a family")
    p.add_argument("--in", dest="input", metavar="FILE", help="family JSON (default: embedded Q7)")
    p.add_argument("--src", type=int, required=True, metavar="U")
    p.add_argument("--dst", type=int, required=True, metavar="V")
    p.add_argument("--fault", type=int, action="append", default=[], metavar="F")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("stats", help="per-tree diameter, center and internal count")
    p.add_argument("--in", dest="input", metavar="FILE", help="family JSON (default: embedded Q7)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="convert a family to dot, json or edge lists")
    p.add_argument("--in", dest="input", metavar="FILE", help="family JSON (default: embedded Q7)")
    p.add_argument("--format", choices=("dot", "json", "edges"), required=True)
    p.add_argument("--out", metavar="FILE", required=True)
    p.add_argument("--tree", type=int, metavar="I", help="export only tree I (1-based)")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return USAGE
    except CistError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
