"""Command-line front end: verify / construct / search / classify / families.

Human-readable output goes to stdout; machine formats are written only
to paths given via --out/--summary, so reports can be piped.  Apart
from the timestamp line (suppressed by --no-meta) all output is
byte-deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import datetime
import json
import re
import sys

from . import constructions, core, engine, search

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

_TOKEN = re.compile(r"(\d+)(\^(-?\d+))?$")


def _read_rle_text(args) -> str:
    if args.rle is not None:
        return args.rle
    with open(args.file, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_with_position(text: str) -> core.Coloring:
    """parse_rle with line/column positions on malformed tokens."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            if tok.startswith("@"):
                ok = bool(re.fullmatch(r"@\d+", tok))
            else:
                mt = _TOKEN.match(tok)
                ok = bool(mt) and int(mt.group(1)) >= 1 and (
                    mt.group(3) is None or int(mt.group(3)) >= 1)
            if not ok:
                raise ValueError(
                    f"malformed token {tok!r} at line {lineno}, column {col + 1}")
            col += len(tok)
    return core.parse_rle(text)


def _meta(args):
    if not args.no_meta:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
        print(f"# generated {stamp}")


def _print_violation(v: core.Violation):
    xm, x1 = v.x.last, v.x.first
    ym = v.y.last
    print(f"violation: X = {v.x.positions} color {v.color_x}, "
          f"Y = {v.y.positions} color {v.color_y}")
    print(f"  2*(x_m - x_1) = 2*({xm} - {x1}) = {2 * (xm - x1)} "
          f"<= y_m - x_1 = {ym} - {x1} = {ym - x1}")


def cmd_verify(args) -> int:
    try:
        coloring = _parse_with_position(_read_rle_text(args))
        if args.r is not None:
            coloring = coloring.with_r(args.r)
    except (OSError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _meta(args)
    v = core.find_violation(coloring, args.m)
    if v is None:
        print(f"L({coloring.r})-coloring of [{coloring.start},{coloring.end}] "
              f"verified for m = {args.m}")
        return EXIT_OK
    _print_violation(v)
    print(f"not an L({coloring.r})-coloring for m = {args.m}")
    return EXIT_VIOLATION


_SEED_NAMES = {"thm31": 2, "thm33": 3, "thm35": 4}


def cmd_construct(args) -> int:
    m = args.m
    name = args.name
    try:
        if name in _SEED_NAMES:
            r = _SEED_NAMES[name]
            part = constructions.lower_string(r, m)
            full = constructions.extend_full(part, m, r)
            bound = full.end
        elif name in ("t43", "t45", "t46"):
            if args.r is None or args.j is None:
                raise ValueError(f"{name} requires --r and --j")
            r, j = args.r, args.j
            w = m - 1
            if name == "t43":
                inner = constructions._inner_from_witness(m, j, r * w + 2, 2 * r * w)
                part = constructions.build_T43(m, r, j, inner)
            elif name == "t45":
                inner = constructions._inner_from_witness(
                    m, j, (r + 1) * w + 2, (2 * r - 1) * w)
                part = constructions.build_T45(m, r, j, inner)
            else:
                inner = constructions._inner_from_witness(
                    m, j, (r + 1) * w + 1, 2 * r * w)
                part = constructions.build_T46(m, r, j, inner)
            full = constructions.extend_full(part, m, r)
            bound = full.end
        elif name == "extend":
            if args.r is None:
                raise ValueError("extend requires --r")
            r = args.r
            inner = _parse_with_position(_read_rle_text(args)).with_r(r)
            part = inner
            full = constructions.extend_full(inner, m, r)
            bound = full.end
        else:
            raise ValueError(f"unknown construction {name!r}")
    except (OSError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _meta(args)
    print(f"coloring: {core.emit_rle(part, with_start=True)}")
    print(f"interval: [{part.start},{part.end}]")
    if not args.no_check:
        if not core.is_L_coloring(full, m):
            print("CHECK FAILED: full extension contains a violation",
                  file=sys.stderr)
            return EXIT_VIOLATION
        print(f"full extension to [1,{full.end}] verified violation-free")
    print(f"witnessed bound: g({m},{full.r}) > {bound}")
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        budget = search.Budget(max_nodes=args.node_budget)
        res = search.compute_g(args.m, args.r, n_max=args.max_n, budget=budget,
                               threads=args.threads)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _meta(args)
    if res.exact:
        print(f"g({args.m},{args.r}) = {res.g}")
    else:
        print(f"g({args.m},{args.r}) > {res.n_reached} "
              f"(lower bound only: {res.stop_reason})")
    if res.witness is not None:
        print(f"witness (n = {len(res.witness)}): "
              f"{core.emit_rle(res.witness, with_start=True)}")
    print(f"nodes: {res.nodes}")
    if args.out:
        payload = {
            "m": args.m, "r": args.r, "status": res.status, "g": res.g,
            "n_reached": res.n_reached, "nodes": res.nodes,
            "witness": res.witness.to_dict() if res.witness else None,
            "witness_rle": core.emit_rle(res.witness, with_start=True)
            if res.witness else None,
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        table = engine.classify_all(args.max)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _meta(args)
    denom = table.R - 1
    print(f"classified r in [2,{table.R}] ({denom} color counts)")
    for label, breakdown in (("by generating rule", table.by_theorem),
                             ("by tightness", table.by_kind)):
        print(f"{label}:")
        for key in sorted(breakdown):
            count = breakdown[key]
            print(f"  {key:<12} {count:>8}  {100.0 * count / denom:6.2f}%")
    uncl = [r for r, v in table.rows.items() if v.kind == "Unclassified"]
    print(f"unclassified: {len(uncl)}")
    if args.max >= 3:
        vals = ", ".join(f"g({m},3)={engine.g_exact_r3(m)}" for m in range(4, 9))
        print(f"three-color exact form (m >= 4): 7(m-1)+1+ceil(m/2):  {vals}, ...")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(engine.table_to_csv(table))
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(engine.summary_to_json(table))
    return EXIT_OK


def cmd_families(args) -> int:
    _meta(args)
    for spec, members in engine.families(args.max):
        print(f"family {spec.name}: start ({spec.r0}, {spec.r1}), "
              f"closed form {spec.closed_form}")
        print(f"  members <= {args.max}: {', '.join(map(str, members))}")
    return EXIT_OK


def _add_common(p):
    p.add_argument("--no-meta", action="store_true",
                   help="suppress the timestamp line")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrcolor", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring and print a certificate")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rle", help="inline run-length coloring, e.g. '1^3 2^2'")
    g.add_argument("--file", help="path to a coloring file")
    p.add_argument("--m", type=int, required=True, help="block size m")
    p.add_argument("--r", type=int, help="declared color count override")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a named extremal coloring")
    p.add_argument("name", choices=sorted(_SEED_NAMES) + ["t43", "t45", "t46",
                                                          "extend"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--rle", help="inner coloring for 'extend'")
    p.add_argument("--file", help="inner coloring file for 'extend'")
    p.add_argument("--no-check", action="store_true",
                   help="skip verifying the full extension")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="compute g(m,r) exactly by backtracking")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, default=10 ** 4)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--out", help="write the result as JSON here")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="classify g(m,r) for all r up to a limit")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", help="write the classification table as CSV here")
    p.add_argument("--summary", help="write the summary as JSON here")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("families", help="list the exactly solved color-count families")
    p.add_argument("--max", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_families)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
