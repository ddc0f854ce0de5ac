"""Command-line front end.

Verbs: rank, lattice, weil, dim, nl, crosscheck.  Output is deterministic
for fixed arguments; rationals render as num/den pairs, never as floats.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import nl as nlmod
from . import rank as rankmod
from .cuspdim import dim_cusp_df, picard_rank_via_cusp
from .errors import NLRankError, TooLarge
from .lattices import catalog, discriminant_form, signature
from .weil import build_weil_rep, group_cap, verify_relations

USAGE_EXIT = 2
DOMAIN_EXIT = 1


def _lattice_from_args(args):
    return catalog(args.name, g=args.g, scale=args.N)


def _cmd_rank(args, out) -> int:
    if args.g_from < 2 or args.g_from > args.g_to:
        raise _Usage(f"need 2 <= --from <= --to, got ({args.g_from}, {args.g_to})")
    reports = rankmod.rank_table(args.g_from, args.g_to, jobs=args.jobs)
    if args.format == "csv":
        out.write(rankmod.table_to_csv(reports))
    elif args.format == "json":
        out.write(rankmod.table_to_json(reports) + "\n")
    else:
        for rep in reports:
            out.write(
                f"g={rep.g} alpha={rep.alpha} beta={rep.beta} "
                f"fracsum={rep.fracsum.numerator}/{rep.fracsum.denominator} "
                f"sqcount={rep.sqcount} rank={rep.rank}\n"
            )
    return 0


def _cmd_lattice(args, out) -> int:
    lat = _lattice_from_args(args)
    sig = signature(lat)
    df = discriminant_form(lat)
    info = {
        "name": lat.name,
        "rank": lat.rank,
        "det": lat.det(),
        "signature": [sig.positive, sig.negative],
        "disc_orders": list(df.orders),
        "disc_cardinality": df.cardinality,
        "level": df.level,
        "sig_mod_8": df.sig_mod_8,
    }
    if args.format == "json":
        out.write(json.dumps(info, sort_keys=True) + "\n")
    else:
        for key in sorted(info):
            out.write(f"{key}: {info[key]}\n")
    return 0


def _cmd_weil(args, out) -> int:
    lat = _lattice_from_args(args)
    w = build_weil_rep(discriminant_form(lat), cap=group_cap())
    rep = verify_relations(w, tol=args.tol)
    obj = {
        "name": lat.name,
        "dimension": w.dimension,
        "level": rep.level,
        "maxErrS2Z": rep.maxErrS2Z,
        "maxErrST3": rep.maxErrST3,
        "maxErrTN": rep.maxErrTN,
        "maxErrUnitary": rep.maxErrUnitary,
        "maxErrZSwap": rep.maxErrZSwap,
        "pass": rep.passed,
    }
    if args.format == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        for key in sorted(obj):
            out.write(f"{key}: {obj[key]}\n")
    return 0 if rep.passed else DOMAIN_EXIT


def _parse_weight(text: str) -> Fraction:
    return Fraction(text)


def _cmd_dim(args, out) -> int:
    lat = catalog("Lambda_g", g=args.g)
    df = discriminant_form(lat)
    if df.cardinality > group_cap():
        raise TooLarge(f"group of order {df.cardinality} exceeds cap {group_cap()}")
    weight = args.weight if args.weight is not None else Fraction(lat.rank, 2)
    rep = dim_cusp_df(df, weight)
    if args.format == "json":
        out.write(rep.to_json() + "\n")
    else:
        out.write(
            f"g={args.g} k={rep.k} d={rep.d} dim={rep.dim} "
            f"parity_ok={rep.parity_ok}\n"
        )
    return 0


def _cmd_nl(args, out) -> int:
    labels = nlmod.enumerate_nl(args.g, args.dmax, args.hmax)
    if args.format == "csv":
        out.write(nlmod.labels_to_csv(labels))
    elif args.format == "json":
        out.write(
            json.dumps(
                [dict(zip(nlmod.CSV_COLUMNS, lab.csv_row())) for lab in labels]
            )
            + "\n"
        )
    else:
        for lab in labels:
            out.write(
                f"h={lab.h} d={lab.d} delta={lab.delta} "
                f"n={lab.n.numerator}/{lab.n.denominator} gamma={lab.gamma}"
                + (" degenerate" if lab.degenerate else "")
                + "\n"
            )
    return 0


def _cmd_crosscheck(args, out) -> int:
    if args.g_from < 2 or args.g_from > args.g_to:
        raise _Usage(f"need 2 <= --from <= --to, got ({args.g_from}, {args.g_to})")
    failures = 0
    for g in range(args.g_from, args.g_to + 1):
        closed = rankmod.picard_rank(g).rank
        via_cusp = picard_rank_via_cusp(catalog("Lambda_g", g=g))
        ok = closed == via_cusp
        failures += not ok
        out.write(
            f"g={g} rank_formula={closed} cusp_pipeline={via_cusp} "
            f"{'ok' if ok else 'MISMATCH'}\n"
        )
    return 0 if failures == 0 else DOMAIN_EXIT


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlrank",
        description="Picard ranks of K3 moduli spaces, two independent ways.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p, default="pretty", choices=("csv", "json", "pretty")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("rank", help="closed-form rank table")
    p.add_argument("--from", dest="g_from", type=int, required=True)
    p.add_argument("--to", dest="g_to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("lattice", help="lattice inspection")
    psub = p.add_subparsers(dest="subverb", required=True)
    pi = psub.add_parser("info")
    pi.add_argument("--name", required=True)
    pi.add_argument("--g", type=int)
    pi.add_argument("--N", type=int)
    add_format(pi, choices=("json", "pretty"))
    pi.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("weil", help="Weil representation checks")
    psub = p.add_subparsers(dest="subverb", required=True)
    pv = psub.add_parser("verify")
    pv.add_argument("--name", required=True)
    pv.add_argument("--g", type=int)
    pv.add_argument("--N", type=int)
    pv.add_argument("--tol", type=float, default=1e-9)
    add_format(pv, choices=("json", "pretty"))
    pv.set_defaults(func=_cmd_weil)

    p = sub.add_parser("dim", help="cusp form dimension for Lambda_g")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--weight", type=_parse_weight, default=None)
    add_format(p, choices=("json", "pretty"))
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("nl", help="Noether-Lefschetz divisor catalog")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_nl)

    p = sub.add_parser("crosscheck", help="two-pipeline agreement over a genus range")
    p.add_argument("--from", dest="g_from", type=int, required=True)
    p.add_argument("--to", dest="g_to", type=int, required=True)
    p.set_defaults(func=_cmd_crosscheck)

    return parser


def dispatch(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code else 0
    try:
        return args.func(args, out)
    except _Usage as exc:
        err.write(f"usage error: {exc}\n")
        err.write(parser.format_usage())
        return USAGE_EXIT
    except NLRankError as exc:
        err.write(f"error: {exc}\n")
        return DOMAIN_EXIT


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
