"""Command line interface.

Subcommands: gen (coefficient dump), verify (built-in suites), ck
(square-representation counts), dissect (progression slice), scan
(candidate congruence search).

Contract: data on stdout, timing on stderr, byte-identical output for
identical invocations.  Exit 0 on success / all checks passing, 1 when a
verification found a counterexample, 2 on usage errors.  JSON output is a
single document; CSV is unquoted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import congruence, overpartitions
from .series import EXACT, mod2_ring
from .squares import ck_table

_FORMATS = ("csv", "json", "table")

_SUITES = ("thm-16n14", "thm-ell:L", "thm-4n:M", "dissection", "kim8",
           "families8:L", "known-table", "combined", "all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overpart",
        description="overpartition congruences: exact series, verifiers, scanner")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("--source", default=overpartitions.INVERSION,
                       help="series construction: invert, product, or 2adic:K")

    def add_format(p, default):
        p.add_argument("--format", choices=_FORMATS, default=default)

    p = sub.add_parser("gen", help="dump pbar coefficients")
    p.add_argument("--limit", type=int, required=True, help="highest n")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mod", type=int, help="reduce mod this power of two")
    g.add_argument("--exact", action="store_true", help="exact values (default)")
    add_source(p)
    add_format(p, "csv")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="one of: " + ", ".join(_SUITES))
    p.add_argument("--limit", type=int, default=10_000)
    add_source(p)
    add_format(p, "json")

    p = sub.add_parser("ck", help="counts of n as ordered sums of k positive squares")
    p.add_argument("--k", type=int, required=True, help="largest tuple length")
    p.add_argument("--limit", type=int, required=True, help="highest n")
    add_format(p, "csv")

    p = sub.add_parser("dissect", help="slice pbar along t*n + r")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mod", type=int)
    p.add_argument("--limit", type=int, required=True)
    add_source(p)
    add_format(p, "csv")

    p = sub.add_parser("scan", help="search progressions for candidate congruences")
    p.add_argument("--amax", type=int, default=16)
    p.add_argument("--mods", default="4,8,16,32,64",
                   help="comma-separated powers of two")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--min-checks", type=int, default=50)
    add_format(p, "json")

    return parser


def _mod_bits(modulus: int) -> int:
    bits = modulus.bit_length() - 1
    if modulus < 2 or (1 << bits) != modulus or bits > 64:
        raise ValueError(f"--mod wants a power of two in 2..2^64, got {modulus}")
    return bits


def _emit_rows(fmt: str, header: list[str], rows: list[list]) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = [dict(zip(header, row)) for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    widths = [max(len(h), *(len(str(r[i])) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> tuple[str, int]:
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    if args.mod is None:
        ring, column = EXACT, "pbar"
    else:
        ring, column = mod2_ring(_mod_bits(args.mod)), f"pbar_mod_{args.mod}"
    series = overpartitions.generating_series(args.limit, ring, args.source)
    rows = [[n, series[n]] for n in range(args.limit + 1)]
    return _emit_rows(args.format, ["n", column], rows), 0


def cmd_ck(args) -> tuple[str, int]:
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    table = ck_table(args.k, args.limit)
    header = ["n"] + [f"c{k}" for k in range(1, args.k + 1)]
    rows = [[n] + [table.count(k, n) for k in range(1, args.k + 1)]
            for n in range(args.limit + 1)]
    return _emit_rows(args.format, header, rows), 0


def cmd_dissect(args) -> tuple[str, int]:
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    if args.mod is None:
        ring, column = EXACT, "value"
    else:
        ring, column = mod2_ring(_mod_bits(args.mod)), "value"
    series = overpartitions.generating_series(args.limit, ring, args.source)
    sliced = series.dissect(args.t, args.r)
    rows = [[n, sliced[n]] for n in range(sliced.order + 1)]
    return _emit_rows(args.format, ["n", column], rows), 0


def _sort_key(report):
    c = report.subject
    if isinstance(c, congruence.CongruenceClaim):
        return (0, c.A, c.B, c.M, "")
    return (1, 0, 0, 0, c)


def _suite_reports(suite, pbar, limit, source):
    if suite == "thm-16n14":
        return [congruence.verify_progression(
            pbar, congruence.CongruenceClaim(16, 14, 16), limit, source)]
    if suite == "dissection":
        return [congruence.verify_dissection_mod16(limit, pbar, source)]
    if suite == "kim8":
        return [congruence.verify_mod8_nonsquare(pbar, limit, source)]
    if suite == "known-table":
        return congruence.run_known_table(pbar, limit, source)
    if suite == "combined":
        return congruence.verify_combined_families(pbar, 2, limit, source)
    if suite.startswith("thm-ell:"):
        ell = _suite_param(suite)
        return congruence.verify_ell_family(pbar, ell, 16, limit, source)
    if suite.startswith("thm-4n:"):
        tier = _suite_param(suite)
        return [congruence.verify_4n_relations(pbar, tier, limit, source)]
    if suite.startswith("families8:"):
        ell = _suite_param(suite)
        return congruence.verify_mod8_families(pbar, ell, limit, source)
    raise ValueError(f"unknown suite {suite!r}; suites: {', '.join(_SUITES)}")


def _suite_param(suite: str) -> int:
    tail = suite.split(":", 1)[1]
    try:
        return int(tail)
    except ValueError:
        raise ValueError(f"suite parameter must be an integer, got {tail!r}")


_ALL_PARTS = ("known-table", "thm-16n14", "thm-ell:7", "thm-ell:23",
              "thm-4n:4", "thm-4n:8", "thm-4n:16", "thm-4n:32",
              "thm-4n:64", "thm-4n:128", "dissection", "combined")


def _report_rows(reports):
    rows = []
    for rep in reports:
        c = rep.subject
        subject = f"{c.A}n+{c.B}_mod_{c.M}" if isinstance(
            c, congruence.CongruenceClaim) else c
        wn, wv = ("", "") if rep.witness is None else rep.witness
        rows.append([subject, rep.status, rep.range_checked, wn, wv, rep.source])
    return rows


def cmd_verify(args) -> tuple[str, int]:
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    suite = args.suite
    known = suite in ("thm-16n14", "dissection", "kim8", "known-table",
                      "combined", "all")
    if not known and not suite.startswith(("thm-ell:", "thm-4n:", "families8:")):
        raise ValueError(f"unknown suite {suite!r}; suites: {', '.join(_SUITES)}")
    needs_4x = suite == "all" or suite.startswith("thm-4n:")
    order = 4 * args.limit if needs_4x else args.limit
    pbar = overpartitions.generating_series(order, None, args.source)
    if suite == "all":
        reports = []
        for part in _ALL_PARTS:
            reports += _suite_reports(part, pbar, args.limit, args.source)
    else:
        reports = _suite_reports(suite, pbar, args.limit, args.source)
    reports.sort(key=_sort_key)
    code = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        doc = [r.as_json_dict() for r in reports]
        return json.dumps(doc, indent=2) + "\n", code
    header = ["subject", "status", "range", "witness_n", "witness_value", "source"]
    return _emit_rows(args.format, header, _report_rows(reports)), code


def cmd_scan(args) -> tuple[str, int]:
    if args.limit < 0:
        raise ValueError(f"--limit must be >= 0, got {args.limit}")
    try:
        mods = [int(m) for m in args.mods.split(",") if m.strip()]
    except ValueError:
        raise ValueError(f"--mods wants comma-separated integers, got {args.mods!r}")
    pbar = overpartitions.generating_series(args.limit, None, overpartitions.INVERSION)
    hits = congruence.scan_congruences(pbar, args.amax, mods, args.limit,
                                       args.min_checks)
    if args.format == "json":
        doc = [h.as_json_dict() for h in hits]
        return json.dumps(doc, indent=2) + "\n", 0
    header = ["A", "B", "M", "checks", "label"]
    rows = [[h.claim.A, h.claim.B, h.claim.M, h.checks,
             "KNOWN" if h.known else "CANDIDATE"] for h in hits]
    return _emit_rows(args.format, header, rows), 0


_COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "ck": cmd_ck,
    "dissect": cmd_dissect,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        out, code = _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    print(f"elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
