"""Command line front end: `verify lemma|theorem|crosscheck ...`.

Each invocation runs one check, writes its report as a JSON line to
stdout (and to --out if given) plus a human-readable line to stderr, and
exits 0 on PASS, 1 on FAIL, 2 on usage errors and 3 on SKIPPED-CAP.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from . import checks
from .config import DEFAULT_CAPS
from .qd import coset_reps
from .park import qd_embedding
from .reports import FAIL, PASS, SKIPPED_CAP, run_check, table_hash

__all__ = ["main", "run", "build_parser"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1,
                        help="worker pool size (single-check runs execute "
                             "sequentially regardless)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized spot checks")
    common.add_argument("--max-order", type=int, default=None,
                        help="override the group-order enumeration cap")
    common.add_argument("--out", default=None,
                        help="append the JSON report line to this file")
    common.add_argument("--dump-tables", default=None, metavar="DIR",
                        help="write coset and iota tables as plain text")

    parser = argparse.ArgumentParser(
        prog="verify",
        description="machine verification of the wreath-product Scott "
                    "module results")
    sub = parser.add_subparsers(dest="command", required=True)

    lemma = sub.add_parser("lemma", parents=[common],
                           help="verify one numbered lemma")
    lemma.add_argument("--id", required=True, dest="lemma_id",
                       choices=checks.LEMMA_IDS)
    lemma.add_argument("--p", required=True, type=int)

    theorem = sub.add_parser("theorem", parents=[common],
                             help="verify the main or side theorem")
    which = theorem.add_mutually_exclusive_group(required=True)
    which.add_argument("--main", action="store_true")
    which.add_argument("--side", action="store_true")
    theorem.add_argument("--p", type=int, default=None)
    theorem.add_argument("--mode", choices=["direct", "structural"],
                         default="direct")
    theorem.add_argument("--group", default=None,
                         help="group spec for --side: qd:2, qd:3, qd:5, s4")

    cross = sub.add_parser("crosscheck", parents=[common],
                           help="run an oracle crosscheck suite")
    cross.add_argument("--suite", required=True,
                       choices=checks.CROSSCHECK_SUITES)
    return parser


def _caps_for(args):
    if args.max_order is None:
        return DEFAULT_CAPS
    return dataclasses.replace(DEFAULT_CAPS, closure_cap=args.max_order)


def _select(args, caps):
    """(check id, params, thunk) for the parsed command."""
    if args.command == "lemma":
        lid, p = args.lemma_id, args.p
        return (f"lemma-{lid}", {"p": p},
                lambda: checks.lemma_check(lid, p, seed=args.seed, caps=caps))
    if args.command == "crosscheck":
        suite = args.suite
        return (f"crosscheck-{suite}", {"suite": suite, "seed": args.seed},
                lambda: checks.crosscheck_suite(suite, seed=args.seed,
                                                caps=caps))
    if args.main:
        if args.p is None:
            raise UsageError("theorem --main requires --p")
        p, mode = args.p, args.mode
        if mode == "direct":
            return (f"thm-main-direct", {"p": p, "mode": mode},
                    lambda: checks.theorem_main_direct(p, caps=caps))
        return (f"thm-main-structural", {"p": p, "mode": mode},
                lambda: checks.theorem_main_structural(p, caps=caps))
    if args.group is None:
        raise UsageError("theorem --side requires --group")
    spec = args.group
    if spec not in ("qd:2", "qd:3", "qd:5", "s4"):
        raise UsageError(f"unknown group spec {spec!r}")
    return (f"thm-side", {"group": spec},
            lambda: checks.theorem_side(spec, caps=caps))


class UsageError(Exception):
    pass


def _dump_tables(directory, p, caps):
    """Plain-text coset table and iota coordinates for inspection."""
    os.makedirs(directory, exist_ok=True)
    table = coset_reps(p)
    rows = [f"m_{j + 1}: v={m.v} matrix={m.m.key()}"
            for j, m in enumerate(table.reps)]
    with open(os.path.join(directory, f"coset_table_p{p}.txt"), "w") as fh:
        fh.write("\n".join(rows) + "\n")
    emb = qd_embedding(p, caps=caps, lazy=True)
    iota_rows = []
    for u in emb.P.sorted_elements():
        w = emb.iota(u)
        iota_rows.append(f"u={u.key()} top={w.top.key()} "
                         f"base={[b.key() for b in w.base]}")
    with open(os.path.join(directory, f"iota_table_p{p}.txt"), "w") as fh:
        fh.write("\n".join(iota_rows) + "\n")
    return {"coset_table": table_hash(rows), "iota_table": table_hash(iota_rows)}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    caps = _caps_for(args)
    try:
        check_id, params, thunk = _select(args, caps)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = dict(params)
    if args.seed:
        params.setdefault("seed", args.seed)
    report = run_check(check_id, params, thunk)
    dump_p = getattr(args, "p", None) or 2
    if args.dump_tables:
        report.hashes.update(_dump_tables(args.dump_tables, dump_p, caps))
    line = report.to_json()
    print(line)
    print(report.human(), file=sys.stderr)
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(line + "\n")
    if report.status == PASS:
        return EXIT_PASS
    if report.status == SKIPPED_CAP:
        return EXIT_CAP
    return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
