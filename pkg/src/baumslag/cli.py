"""Command-line front door.

One executable, one subcommand per operation: reductions and conjugacy
for the tower groups, the same for the two-generator group under `bg`,
brute-force cross-checks under `oracle`, and the witness-pair harness
under `witness` and `cltable`.  Words are single shell arguments like
"s2 s1^3 s2^-1"; compressed exponents use term(c,e)/run(s,a,step,count)
text joined by +.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bs12 as B
from . import gersten as BG
from . import oracle as O
from . import powersum as ps
from . import tower as TW
from . import witnesses as X
from . import words as W


def _fmt_bound(x) -> str:
    if isinstance(x, int):
        return ps.fmt_int(x)
    return ps.format_power_sum(x)


def _parse_exponent(text: str) -> ps.PowerSum:
    try:
        return ps.from_int(int(text))
    except ValueError:
        return ps.parse_power_sum(text)


def _budget(n: Optional[int]) -> O.SearchBudget:
    if n is None:
        return O.SearchBudget()
    return O.SearchBudget(max_conjugator_length=n)


def _conj_record(u: str, v: str, outcome) -> str:
    cert = outcome.certificate
    rec = {
        "u": u,
        "v": v,
        "gamma": str(cert.gamma) if cert is not None else None,
        "method": cert.method if cert is not None else outcome.status,
        "verified": bool(cert.verified) if cert is not None else False,
    }
    return json.dumps(rec)


# --- tower-group commands ---------------------------------------------------

def cmd_reduce(args) -> int:
    ctx = TW.TowerContext(args.m)
    print(TW.britton_reduce(W.parse_word(args.word), ctx))
    return 0


def cmd_rank(args) -> int:
    ctx = TW.TowerContext(args.m)
    r = TW.rank(W.parse_word(args.word), ctx)
    print(json.dumps({
        "rank": r.rank,
        "reduced": str(r.reduced),
        "conjugator": str(r.conjugator),
        "verified": bool(r.verified),
    }))
    return 0


def cmd_conj(args) -> int:
    ctx = TW.TowerContext(args.m)
    out = TW.conj_gm(W.parse_word(args.u), W.parse_word(args.v), ctx,
                     budget=_budget(args.budget))
    print(_conj_record(args.u, args.v, out))
    return 0


def cmd_eval_bs12(args) -> int:
    print(B.eval_word(W.parse_word(args.word)))
    return 0


def cmd_naf(args) -> int:
    n = ps.naf(_parse_exponent(args.value))
    print(ps.format_power_sum(n))
    return 0


def cmd_lenbounds(args) -> int:
    k = _parse_exponent(args.value)
    lo, hi = TW.length_bounds_power(args.level, k, TW.TowerContext(args.m))
    print(_fmt_bound(lo), _fmt_bound(hi))
    return 0


# --- two-generator group commands -------------------------------------------

def cmd_bg_reduce(args) -> int:
    print(BG.britton_reduce_bg(W.parse_word(args.word)))
    return 0


def cmd_bg_conj(args) -> int:
    out = BG.conj_bg(W.parse_word(args.u), W.parse_word(args.v),
                     budget=_budget(args.budget))
    print(_conj_record(args.u, args.v, out))
    return 0


def cmd_bg_lenbounds(args) -> int:
    lo, hi = BG.length_bounds_bg(_parse_exponent(args.value))
    print(_fmt_bound(lo), _fmt_bound(hi))
    return 0


# --- oracle commands ---------------------------------------------------------

def _oracle_group(args):
    if args.bg:
        return BG.GerstenContext()
    return TW.TowerContext(args.m)


def cmd_oracle_conj(args) -> int:
    g = O.bounded_conjugator_search(
        W.parse_word(args.u), W.parse_word(args.v), _oracle_group(args),
        _budget(args.radius))
    print("none" if g is None else g)
    return 0


def cmd_oracle_len(args) -> int:
    n = O.min_word_length(W.parse_word(args.word), _oracle_group(args),
                          _budget(args.radius))
    print("none" if n is None else n)
    return 0


def cmd_oracle_naf(args) -> int:
    print(O.brute_min_signed_terms(int(args.value), max_exp=args.max_exp))
    return 0


# --- witness harness ---------------------------------------------------------

def _emit_reports(reports, fmt: str) -> None:
    rows = [X.report_fields(r) for r in reports]
    if fmt == "tsv":
        if rows:
            print("\t".join(rows[0].keys()))
        for row in rows:
            print("\t".join(row.values()))
    else:
        for row in rows:
            print(json.dumps(row))


def cmd_witness(args) -> int:
    if args.group == "gm":
        if args.m is None:
            raise SystemExit("witness --group gm needs -m")
        rep = X.make_witness_gm(args.m, args.n)
    else:
        rep = X.make_witness_bg(args.n)
    _emit_reports([rep], args.format)
    return 0


def cmd_cltable(args) -> int:
    rows = X.cl_table(args.max_m, args.max_n, with_oracle=args.oracle)
    _emit_reports(rows, args.format)
    return 0


# --- wiring ------------------------------------------------------------------

def _add_format(p) -> None:
    p.add_argument("--format", choices=("records", "tsv"),
                   default="records")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="baumslag",
        description="exact word and conjugacy computations in iterated "
                    "Baumslag-Solitar groups")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="pinch-reduce a tower word")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("rank", help="highest letter surviving reduction "
                                    "of every conjugate")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("conj", help="decide conjugacy in a tower group")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("eval-bs12", help="evaluate a word in the affine "
                                         "model of the base group")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval_bs12)

    p = sub.add_parser("naf", help="non-adjacent form of an exponent")
    p.add_argument("value")
    p.set_defaults(func=cmd_naf)

    p = sub.add_parser("lenbounds", help="length bounds for s_i^k")
    p.add_argument("value")
    p.add_argument("-m", type=int, default=2)
    p.add_argument("-i", dest="level", type=int, default=0)
    p.set_defaults(func=cmd_lenbounds)

    bg = sub.add_parser("bg", help="the two-generator group")
    bgsub = bg.add_subparsers(dest="bg_command", required=True)

    p = bgsub.add_parser("reduce")
    p.add_argument("word")
    p.set_defaults(func=cmd_bg_reduce)

    p = bgsub.add_parser("conj")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_bg_conj)

    p = bgsub.add_parser("lenbounds")
    p.add_argument("value")
    p.set_defaults(func=cmd_bg_lenbounds)

    orc = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = orc.add_subparsers(dest="oracle_command", required=True)

    p = osub.add_parser("conj")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("-m", type=int, default=2)
    p.add_argument("--bg", action="store_true")
    p.add_argument("--radius", type=int, default=None)
    p.set_defaults(func=cmd_oracle_conj)

    p = osub.add_parser("len")
    p.add_argument("word")
    p.add_argument("-m", type=int, default=2)
    p.add_argument("--bg", action="store_true")
    p.add_argument("--radius", type=int, default=None)
    p.set_defaults(func=cmd_oracle_len)

    p = osub.add_parser("naf")
    p.add_argument("value")
    p.add_argument("--max-exp", type=int, default=16)
    p.set_defaults(func=cmd_oracle_naf)

    p = sub.add_parser("witness", help="one verified hard conjugacy pair")
    p.add_argument("--group", choices=("gm", "bg"), required=True)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("cltable", help="witness pairs over a grid of "
                                       "heights and scales")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_cltable)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ps.TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
