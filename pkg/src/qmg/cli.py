"""Command-line front end.

Polynomials are given as whitespace-separated integer coefficients,
highest degree first: "1 0 4 0 1" is x^4 + 4x^2 + 1.  Output is JSON
lines (or CSV for ``scan --csv``).

Exit codes: 0 all checks pass, 1 mathematical disagreement, 2 usage or
parse error, 3 unknown verdicts (factoring budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import TextIO

from .dedekind import Status, is_monogenic
from .families import OVERLAP_PAIRS, Exemplar, FamilyId, exemplars, overlap_scan
from .galois import GaloisLabel, classify, frobenius_cycle_types, resolvent_cubic
from .harness import SCAN_FIELDS, ScanConfig, check_exemplar, row_failed, scan_rows, scan_summary, verdict_dict
from .intarith import DEFAULT_BUDGET, factor
from .poly import IntPoly, discriminant

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj) + "\n")


def _parse_poly(text: str) -> IntPoly:
    try:
        p = IntPoly.from_text(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if p.degree < 1:
        raise UsageError(f"polynomial {text!r} is constant")
    return p


def _require_quartic(p: IntPoly) -> None:
    if p.degree != 4 or not p.is_monic():
        raise UsageError(f"expected a monic quartic, got {p}")


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("QMG_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"QMG_BUDGET={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def _config(args) -> ScanConfig:
    return ScanConfig(budget=_budget(args), seed=args.seed)


def cmd_classify(args, out: TextIO) -> int:
    f = _parse_poly(args.poly)
    _require_quartic(f)
    try:
        label, ev = classify(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({
        "poly": f.to_text(),
        "group": label.value,
        "group_name": label.group_name,
        "resolvent": ev.resolvent.to_text(),
        "resolvent_rational_roots": list(ev.rational_roots_of_resolvent),
        "disc": discriminant(f),
        "disc_is_square": ev.disc_is_square,
        "s": ev.chosen_s,
        "m": ev.splitting_core_m,
        "g_factors": [g.to_text() for g in ev.g_factors] if ev.g_factors else None,
    }, out)
    return EXIT_OK


def cmd_resolvent(args, out: TextIO) -> int:
    f = _parse_poly(args.poly)
    _require_quartic(f)
    _emit({"poly": f.to_text(), "resolvent": resolvent_cubic(f).to_text()}, out)
    return EXIT_OK


def cmd_disc(args, out: TextIO) -> int:
    f = _parse_poly(args.poly)
    d = discriminant(f)
    fd = factor(d, _budget(args), args.seed) if d else None
    _emit({
        "poly": f.to_text(),
        "disc": d,
        "disc_factored": str(fd) if fd and fd.complete else None,
    }, out)
    return EXIT_OK


def cmd_monogenic(args, out: TextIO) -> int:
    f = _parse_poly(args.poly)
    config = _config(args)
    try:
        v = is_monogenic(f, config.budget, config.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"poly": f.to_text(), **verdict_dict(v)}, out)
    return EXIT_UNKNOWN if v.status is Status.UNKNOWN else EXIT_OK


def cmd_scan(args, out: TextIO) -> int:
    try:
        fid = FamilyId.parse(args.family)
        rows = scan_rows(fid, args.t_min, args.t_max, args.workers, _config(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = scan_summary(rows)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            _write_rows(rows, summary, fh, args.csv)
        _emit(summary, out)
    else:
        _write_rows(rows, summary, out, args.csv)
    if any(row_failed(r) for r in rows):
        return EXIT_DISAGREE
    return EXIT_UNKNOWN if summary["unknown"] else EXIT_OK


def _write_rows(rows: list[dict], summary: dict, fh: TextIO, as_csv: bool) -> None:
    if as_csv:
        writer = csv.DictWriter(fh, fieldnames=SCAN_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return
    for row in rows:
        _emit(row, fh)
    _emit(summary, fh)


def _load_registry(path: str) -> list[Exemplar]:
    """Exemplars from a JSON list of {name, poly, group, disc} objects."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
        return [
            Exemplar(e["name"], IntPoly.from_text(e["poly"]), GaloisLabel(e.get("group", "4T1")),
                     int(e["disc"]), e.get("source", path))
            for e in raw
        ]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad registry {path}: {exc}") from None


def cmd_verify_exemplars(args, out: TextIO) -> int:
    registry = _load_registry(args.registry) if args.registry else exemplars()
    if args.only:
        known = {e.name for e in registry}
        missing = [n for n in args.only if n not in known]
        if missing:
            raise UsageError(f"unknown exemplar(s): {', '.join(missing)}")
        registry = [e for e in registry if e.name in args.only]
    config = _config(args)
    results = [check_exemplar(e, config) for e in registry]
    for r in results:
        _emit(r, out)
    passed = sum(r["pass"] for r in results)
    _emit({"summary": True, "passed": passed, "total": len(results)}, out)
    return EXIT_OK if passed == len(results) else EXIT_DISAGREE


def cmd_overlap(args, out: TextIO) -> int:
    if args.pair not in OVERLAP_PAIRS:
        raise UsageError(f"unknown pair {args.pair!r}; choose from {', '.join(sorted(OVERLAP_PAIRS))}")
    rep = overlap_scan(args.pair, args.t_bound, args.param_bound, _budget(args))
    _emit({
        "pair": rep.pair,
        "t_bound": args.t_bound,
        "param_bound": args.param_bound,
        "left_members": rep.left_count,
        "right_members": rep.right_count,
        "collisions": [{"left": list(lp), "right": list(rp), "disc": d} for lp, rp, d in rep.collisions],
        "reason": rep.reason,
        "left_2adic": sorted(rep.left_valuations),
        "right_2adic": sorted(rep.right_valuations),
    }, out)
    return EXIT_DISAGREE if rep.collisions else EXIT_OK


def cmd_frobenius(args, out: TextIO) -> int:
    f = _parse_poly(args.poly)
    _require_quartic(f)
    if discriminant(f) == 0:
        raise UsageError(f"{f} has a repeated root")
    prof = frobenius_cycle_types(f, args.bound)
    _emit({
        "poly": f.to_text(),
        "bound": args.bound,
        "primes_used": prof.primes_used,
        "observed": sorted(prof.observed),
        "counts": dict(sorted(prof.counts.items())),
        "inferred": prof.inferred.value if prof.inferred else None,
    }, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="Pollard rho iteration budget (default: $QMG_BUDGET or 2^26)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="qmg", description="Monogenic quartics and their Galois groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("classify", cmd_classify, "Galois group of a monic quartic"),
        ("resolvent", cmd_resolvent, "cubic resolvent of a monic quartic"),
        ("disc", cmd_disc, "discriminant and its factorization"),
        ("monogenic", cmd_monogenic, "monogenicity via Dedekind's criterion"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("poly", help='coefficients, highest degree first, e.g. "1 0 4 0 1"')
        p.set_defaults(func=fn)

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius cycle-type statistics")
    p.add_argument("poly")
    p.add_argument("--bound", type=int, default=10**4, help="largest prime to use")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("scan", parents=[common], help="scan a family over a range of t")
    p.add_argument("family", choices=["X2", "X3", "X4", "X5"])
    p.add_argument("t_min", type=int)
    p.add_argument("t_max", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", help="write rows here; the summary still goes to stdout")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-exemplars", parents=[common], help="check the cyclic exemplar registry")
    p.add_argument("--only", nargs="+", metavar="NAME")
    p.add_argument("--registry", help="JSON list of {name, poly, group, disc} to check instead")
    p.set_defaults(func=cmd_verify_exemplars)

    p = sub.add_parser("overlap", parents=[common], help="discriminant collision scan between two families")
    p.add_argument("pair", help=", ".join(sorted(OVERLAP_PAIRS)))
    p.add_argument("--t-bound", type=int, default=1000)
    p.add_argument("--param-bound", type=int, default=1000)
    p.set_defaults(func=cmd_overlap)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qmg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qmg: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
