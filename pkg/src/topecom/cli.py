"""Command-line surface: sequence generation, system construction,
committee enumeration, scheme tables, and one-shot verification suites.

Exit codes: 0 success, 1 usage error or verification failure, 2 input
invariant violation, 3 hypothesis violation (verifier skipped), 4
resource guard exceeded. All ordinary output goes to stdout and is
byte-deterministic; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import committees, om_core, schemes
from . import farey as fy
from .errors import GuardError, InvariantError
from .report import Report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2
EXIT_HYPOTHESIS = 3
EXIT_GUARD = 4

# built-in desk instances for `verify all`
_TRIANGLE = ((1, 0), (-1, 1), (-1, -1))
_FOURLINES = ((1, 0), (0, 1), (-1, 1), (-1, -1))


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; the contract wants 1
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit_json(payload: dict) -> None:
    payload = {"v": 1, **payload}
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _warn_force(args) -> None:
    if getattr(args, "force", False):
        print("warning: resource guards disabled by --force", file=sys.stderr)


def _print_report(report: Report) -> int:
    for line in report.lines():
        print(line)
    if report.skipped:
        return EXIT_HYPOTHESIS
    return EXIT_OK if report.ok else EXIT_USAGE


# ---------------------------------------------------------------------------
# farey
# ---------------------------------------------------------------------------


def _cmd_farey_gen(args) -> int:
    if args.oracle and args.kind != "boolean":
        raise ValueError("--oracle applies to --kind boolean only")
    if args.kind == "standard":
        seq = fy.farey_sequence(args.n)
    else:
        if args.m is None:
            raise ValueError(f"--m is required for kind {args.kind!r}")
        if args.kind == "numbound":
            seq = fy.farey_numerator_bounded(args.n, args.m)
        elif args.oracle:
            seq = fy.farey_boolean_oracle(args.n, args.m, force=args.force)
        else:
            seq = fy.farey_boolean(args.n, args.m)
    if args.json:
        _emit_json(
            {
                "kind": seq.kind,
                "n": seq.n,
                "m": seq.m,
                "entries": [fy.format_fraction(f) for f in seq],
            }
        )
    else:
        for f in seq:
            print(fy.format_fraction(f))
    return EXIT_OK


def _cmd_farey_neighbors(args) -> int:
    f = fy.parse_fraction(args.frac)
    pred = fy.neighbor_half(args.m, f, "pred")
    succ = fy.neighbor_half(args.m, f, "succ")
    if args.json:
        _emit_json(
            {
                "m": args.m,
                "frac": fy.format_fraction(f),
                "pred": fy.format_fraction(pred),
                "succ": fy.format_fraction(succ),
            }
        )
    else:
        print(f"pred {fy.format_fraction(pred)}, succ {fy.format_fraction(succ)}")
    return EXIT_OK


def _cmd_farey_maps(args) -> int:
    seq = fy.farey_boolean(2 * args.m, args.m)
    left, right = fy.halves(seq)
    fm = fy.farey_sequence(args.m).entries
    tables = {}
    for side, half in (("left", left), ("right", right)):
        for orientation in ("preserving", "reversing"):
            key = f"half-to-fm {side} {orientation}"
            tables[key] = [(f, fy.map_half_to_fm(f, side, orientation)) for f in half]
            key = f"fm-to-half {side} {orientation}"
            tables[key] = [(f, fy.map_fm_to_half(f, side, orientation)) for f in fm]
    if args.json:
        _emit_json(
            {
                "m": args.m,
                "maps": {
                    key: [[fy.format_fraction(a), fy.format_fraction(b)] for a, b in rows]
                    for key, rows in tables.items()
                },
            }
        )
    else:
        for key in sorted(tables):
            print(f"{key}:")
            for a, b in tables[key]:
                print(f"  {fy.format_fraction(a)} -> {fy.format_fraction(b)}")
    return EXIT_OK


def _cmd_farey_verify(args) -> int:
    report = fy.run_suite(args.m_max, oracle_max=args.oracle_max)
    for line in report.lines():
        print(line)
    print("OK" if report.ok else "FAILED")
    return EXIT_OK if report.ok else EXIT_USAGE


# ---------------------------------------------------------------------------
# om
# ---------------------------------------------------------------------------


def _cmd_om_from_arrangement(args) -> int:
    system = om_core.from_central_arrangement(om_core.parse_arrangement(_read(args.file)))
    if args.json:
        _emit_json({"t": system.t, "topes": list(system.topes)})
    else:
        for tope in system.topes:
            print(tope)
    return EXIT_OK


def _cmd_om_validate(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    print(f"OK t={system.t} |T|={len(system)}")
    return EXIT_OK


def _cmd_om_info(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    acyclic = om_core.is_acyclic(system)
    sizes = [len(om_core.positive_halfspace(system, e)) for e in range(1, system.t + 1)]
    if args.json:
        _emit_json(
            {
                "t": system.t,
                "topes": len(system),
                "acyclic": acyclic,
                "halfspaces": sizes,
            }
        )
    else:
        print(f"t={system.t} |T|={len(system)} acyclic={str(acyclic).lower()}")
        print("halfspaces=" + ",".join(str(s) for s in sizes))
    return EXIT_OK


# ---------------------------------------------------------------------------
# committees
# ---------------------------------------------------------------------------


def _print_family(fam: committees.CommitteeFamily, as_json: bool) -> None:
    nonempty = {
        str(k): [list(c.members) for c in fam.layers[k]]
        for k in sorted(fam.layers)
        if fam.layers[k]
    }
    if as_json:
        _emit_json({"layers": nonempty})
    else:
        for k in sorted(fam.layers):
            for com in fam.layers[k]:
                print(",".join(com.members))


def _cmd_committees_enumerate(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    found = committees.enumerate_layer(
        system, args.layer, args.no_opposites, force=args.force
    )
    if args.json:
        layers = {str(args.layer): [list(c.members) for c in found]} if found else {}
        _emit_json({"layers": layers})
    else:
        for com in found:
            print(",".join(com.members))
    return EXIT_OK


def _cmd_committees_all(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    fam = committees.enumerate_all(system, args.no_opposites, force=args.force)
    _print_family(fam, args.json)
    return EXIT_OK


def _cmd_committees_minimal(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    fam = committees.minimal_committees(system, force=args.force)
    _print_family(fam, args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# schemes
# ---------------------------------------------------------------------------


def _cmd_schemes_johnson(args) -> int:
    schemes.Johnson(args.n, args.d)
    valencies = [schemes.johnson_valency(args.n, args.d, i) for i in range(args.d + 1)]
    table = [
        [[schemes.johnson_p(args.n, args.d, i, j, k) for j in range(args.d + 1)]
         for i in range(args.d + 1)]
        for k in range(args.d + 1)
    ]
    if args.json:
        _emit_json({"kind": "johnson", "n": args.n, "d": args.d, "valencies": valencies, "p": table})
    else:
        print(f"johnson n={args.n} d={args.d}")
        for i, v in enumerate(valencies):
            print(f"valency {i} {v}")
        for k in range(args.d + 1):
            for i in range(args.d + 1):
                for j in range(args.d + 1):
                    print(f"p {k} {i} {j} {table[k][i][j]}")
    return EXIT_OK


def _cmd_schemes_hamming(args) -> int:
    schemes.Hamming(args.m)
    table = [
        [[schemes.hamming_p(args.m, i, j, k) for j in range(args.m + 1)]
         for i in range(args.m + 1)]
        for k in range(args.m + 1)
    ]
    if args.json:
        _emit_json({"kind": "hamming", "m": args.m, "p": table})
    else:
        print(f"hamming m={args.m}")
        for k in range(args.m + 1):
            for i in range(args.m + 1):
                for j in range(args.m + 1):
                    print(f"p {k} {i} {j} {table[k][i][j]}")
    return EXIT_OK


def _cmd_schemes_cross(args) -> int:
    whitney = schemes.crosspolytope_whitney(args.m, args.d)
    valencies = [
        schemes.crosspolytope_valency(args.m, args.d, i) for i in range(args.d + 1)
    ]
    if args.json:
        _emit_json(
            {"kind": "cross", "m": args.m, "d": args.d, "whitney": whitney, "valencies": valencies}
        )
    else:
        print(f"cross m={args.m} d={args.d}")
        print(f"whitney {whitney}")
        for i, v in enumerate(valencies):
            print(f"valency {i} {v}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify_prop8(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    return _print_report(committees.verify_prop8(system, force=args.force))


def _cmd_verify_thm9(args) -> int:
    system = om_core.parse_topes(_read(args.file))
    return _print_report(committees.verify_thm9(system, force=args.force))


def _cmd_verify_schemes(args) -> int:
    return _print_report(schemes.run_suite(args.max_n, args.max_m))


def _cmd_verify_all(args) -> int:
    reports = [
        fy.run_suite(args.m_max),
        schemes.run_suite(args.max_n, args.max_m),
    ]
    for name, vectors in (("triangle", _TRIANGLE), ("fourlines", _FOURLINES)):
        system = om_core.from_central_arrangement(vectors)
        for verifier in (committees.verify_prop8, committees.verify_thm9):
            rep = verifier(system)
            reports.append(Report(f"{rep.title}[{name}]", rep.checks, rep.skipped))
    status = EXIT_OK
    for rep in reports:
        code = _print_report(rep)
        status = status or code
    return status


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_json(p) -> None:
    p.add_argument("--json", action="store_true", help="emit one line of JSON")


def _add_force(p) -> None:
    p.add_argument("--force", action="store_true", help="override resource guards")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="topecom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    farey_p = sub.add_parser("farey", help="fraction sequences and their formulas")
    farey_sub = farey_p.add_subparsers(dest="action", required=True)

    p = farey_sub.add_parser("gen", help="print a sequence, one 'h/k' per line")
    p.add_argument("--kind", choices=("standard", "boolean", "numbound"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--oracle", action="store_true", help="use the subset-definition oracle")
    _add_force(p)
    _add_json(p)
    p.set_defaults(func=_cmd_farey_gen)

    p = farey_sub.add_parser("neighbors", help="adjacent entries in the order-2m family")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--frac", required=True, metavar="h/k")
    _add_json(p)
    p.set_defaults(func=_cmd_farey_neighbors)

    p = farey_sub.add_parser("maps", help="the eight half-to-order-m bijections")
    p.add_argument("--m", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_farey_maps)

    p = farey_sub.add_parser("verify", help="run the full fraction-formula suite")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--oracle-max", type=int, default=8)
    p.set_defaults(func=_cmd_farey_verify)

    om_p = sub.add_parser("om", help="sign-vector systems")
    om_sub = om_p.add_subparsers(dest="action", required=True)

    p = om_sub.add_parser("from-arrangement", help="regions of a central arrangement")
    p.add_argument("file")
    _add_json(p)
    p.set_defaults(func=_cmd_om_from_arrangement)

    p = om_sub.add_parser("validate", help="check a tope file's invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_om_validate)

    p = om_sub.add_parser("info", help="summary of a tope file")
    p.add_argument("file")
    _add_json(p)
    p.set_defaults(func=_cmd_om_info)

    com_p = sub.add_parser("committees", help="majority committees of a system")
    com_sub = com_p.add_subparsers(dest="action", required=True)

    p = com_sub.add_parser("enumerate", help="committees of one size")
    p.add_argument("file")
    p.add_argument("--layer", type=int, required=True)
    p.add_argument("--no-opposites", action="store_true")
    _add_force(p)
    _add_json(p)
    p.set_defaults(func=_cmd_committees_enumerate)

    p = com_sub.add_parser("all", help="every committee, grouped by size")
    p.add_argument("file")
    p.add_argument("--no-opposites", action="store_true")
    _add_force(p)
    _add_json(p)
    p.set_defaults(func=_cmd_committees_all)

    p = com_sub.add_parser("minimal", help="inclusion-minimal committees")
    p.add_argument("file")
    _add_force(p)
    _add_json(p)
    p.set_defaults(func=_cmd_committees_minimal)

    sch_p = sub.add_parser("schemes", help="closed-form scheme parameters")
    sch_sub = sch_p.add_subparsers(dest="action", required=True)

    p = sch_sub.add_parser("johnson")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_schemes_johnson)

    p = sch_sub.add_parser("hamming")
    p.add_argument("--m", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_schemes_hamming)

    p = sch_sub.add_parser("cross")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_schemes_cross)

    ver_p = sub.add_parser("verify", help="one-shot verification suites")
    ver_sub = ver_p.add_subparsers(dest="action", required=True)

    p = ver_sub.add_parser("prop8", help="full-family structure of a tope file")
    p.add_argument("file")
    _add_force(p)
    p.set_defaults(func=_cmd_verify_prop8)

    p = ver_sub.add_parser("thm9", help="opposite-free-family structure of a tope file")
    p.add_argument("file")
    _add_force(p)
    p.set_defaults(func=_cmd_verify_thm9)

    p = ver_sub.add_parser("schemes", help="closed forms against counting oracles")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-m", type=int, default=5)
    p.set_defaults(func=_cmd_verify_schemes)

    p = ver_sub.add_parser("all", help="every suite on the built-in instances")
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-m", type=int, default=5)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _warn_force(args)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
