"""Command-line front end.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
error, 3 enumeration limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import config
from .abacus import (ChargedMultipartition, big_upsilon, big_upsilon_ml, beta_set,
                     m_core, render_abacus, render_beta, upsilon)
from .affine import parse_affine
from .blocks import verify_uglov
from .errors import EnumerationLimitError, LevelRankError, ParseError, TheoremViolation
from .gln import hc_series, sweep, verify_duality
from .partition import format_partition, parse_multipartition, parse_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _window(text):
    if text is None:
        return None
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise ParseError(f"window must look like LO:HI, got {text!r}", text, 0) from None
    return lo, hi


def _emit(args, payload: dict, text: str):
    mode = args.output
    if mode in ("json", "both"):
        print(_dump(payload))
    if mode in ("ascii", "both"):
        sys.stdout.write(text)


def cmd_core_quotient(args) -> int:
    p = parse_partition(args.partition)
    m, s = args.m, args.charge
    a = upsilon(m, beta_set(p, s))
    cm = a.charged()
    core = m_core(p, m)
    before = render_abacus(a, glyph=args.glyph)
    after = render_abacus(a.slid(), glyph=args.glyph)
    payload = {"partition": list(p), "m": m, "charge": s, "core": list(core),
               "quotient": cm.components.to_json(), "charges": list(cm.charges),
               "abacus": before, "slid_abacus": after}
    text = (f"partition  {format_partition(p)}  m={m}  charge={s}\n"
            f"core       {format_partition(core)}\n"
            f"quotient   {cm.components}\n"
            f"charges    {cm.charges}\n"
            f"abacus\n{before}"
            f"abacus after sliding\n{after}")
    _emit(args, payload, text)
    return EXIT_OK


def _charges(text, expected):
    try:
        values = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise ParseError(f"malformed charge vector {text!r}", text, 0) from None
    if len(values) != expected:
        raise ParseError(f"expected {expected} charges, got {len(values)}", text, 0)
    return values


def cmd_uglov(args) -> int:
    if args.json:
        cm = ChargedMultipartition.from_json(json.loads(args.json))
    else:
        comps = parse_multipartition(args.components)
        cm = ChargedMultipartition(comps, _charges(args.charges, len(comps)))
    if cm.level != args.l:
        raise ParseError(f"--l {args.l} but {cm.level} components were given")
    img = big_upsilon_ml(args.l, args.m, cm)
    src_pic = render_abacus(cm.abacus(), glyph=args.glyph)
    img_pic = render_abacus(img.abacus(), glyph=args.glyph)
    payload = {"l": args.l, "m": args.m, "input": cm.to_json(), "image": img.to_json(),
               "input_abacus": src_pic, "image_abacus": img_pic}
    text = (f"input  {cm}\n{src_pic}"
            f"image  {img}\n{img_pic}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_abacus(args) -> int:
    p = parse_partition(args.partition)
    b = beta_set(p, args.charge)
    window = _window(args.window)
    if args.m == 1:
        pic = render_beta(b, window)
    else:
        pic = render_abacus(upsilon(args.m, b), window, glyph=args.glyph)
    _emit(args, {"partition": list(p), "m": args.m, "charge": args.charge, "abacus": pic}, pic)
    return EXIT_OK


def cmd_hc_series(args) -> int:
    mu = parse_partition(args.mu)
    series = hc_series(args.n, args.m, mu)
    payload = {"n": args.n, "m": args.m, "mu": list(mu), "series": [list(p) for p in series],
               "chi": [big_upsilon(args.m, p, mu.length).to_json() for p in series]}
    text = "".join(f"{format_partition(p):<16} {big_upsilon(args.m, p, mu.length)}\n"
                   for p in series)
    _emit(args, payload, text)
    return EXIT_OK


def _write_lines(args, records):
    lines = [_dump(r) for r in records]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("".join(line + "\n" for line in lines))
    if args.output in ("json", "both"):
        for line in lines:
            print(line)


def _summary(title, statuses):
    counts = Counter(statuses)
    parts = "  ".join(f"{k}={counts[k]}" for k in sorted(counts))
    verdict = "PASS" if all(st == "PASS" for st in statuses) else "FAIL"
    return f"{title}: {len(statuses)} instances  {parts}  => {verdict}\n"


def cmd_verify_uglov(args) -> int:
    records = verify_uglov(args.l, args.m, args.kmax, args.window)
    _write_lines(args, records)
    statuses = [r["status"] for r in records]
    if args.output in ("ascii", "both"):
        sys.stdout.write(_summary(f"uglov l={args.l} m={args.m} K<={args.kmax} window={args.window}",
                                  statuses))
    return EXIT_OK if all(s == "PASS" for s in statuses) else EXIT_FAIL


def _duality_table(reports) -> str:
    head = f"{'n':>3} {'l':>2} {'lambda':<10} {'m':>2} {'mu':<10} {'|I|':>4} {'blocks':>7} " \
           f"{'w_l':<22} {'w_m':<22} {'diag':<5} {'cong*':<5} {'ms':>7}  status\n"
    rows = []
    for r in reports:
        cong = {True: "yes", False: "no", None: "-"}[r.congruence_multiset]
        rows.append(
            f"{r.n:>3} {r.l:>2} {format_partition(r.lam):<10} {r.m:>2} {format_partition(r.mu):<10} "
            f"{len(r.intersection):>4} {f'{r.left_block_size}/{r.right_block_size}':>7} "
            f"{str(r.w_l or '-'):<22} {str(r.w_m or '-'):<22} {str(r.diagram_ok).lower():<5} "
            f"{cong:<5} {r.elapsed_ms:>7.1f}  {r.status}\n")
    return head + "".join(rows) + "(cong* = multiset congruence on both sides)\n"


def _finish_duality(args, reports) -> int:
    _write_lines(args, [r.to_json() for r in reports])
    statuses = [r.status for r in reports]
    if args.output in ("ascii", "both"):
        sys.stdout.write(_duality_table(reports))
        sys.stdout.write(_summary("duality", statuses))
    return EXIT_OK if all(s == "PASS" for s in statuses) else EXIT_FAIL


def cmd_verify_duality(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    witnesses = None
    if args.w_l or args.w_m:
        if not (args.w_l and args.w_m):
            raise ParseError("--w-l and --w-m must be given together")
        witnesses = (parse_affine(args.w_l), parse_affine(args.w_m))
    report = verify_duality(args.n, args.l, lam, args.m, mu,
                            shift_bound=args.shift_bound, witnesses=witnesses)
    return _finish_duality(args, [report])


def _pairs(text):
    try:
        return [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]
    except ValueError:
        raise ParseError(f"pairs must look like '2,3;3,2', got {text!r}", text, 0) from None


def cmd_verify_sweep(args) -> int:
    reports = sweep(args.nmax, _pairs(args.pairs), shift_bound=args.shift_bound,
                    jobs=args.jobs, n_min=args.nmin)
    return _finish_duality(args, reports)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "ascii", "both"), default=None)
    common.add_argument("--config", default=None, help="key=value limits file")
    common.add_argument("--max-partition-n", type=int, default=None)
    common.add_argument("--max-multipartitions", type=int, default=None)
    common.add_argument("--max-affine", type=int, default=None)

    parser = argparse.ArgumentParser(prog="levelrank", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core-quotient", parents=[common], help="m-core, m-quotient and abacus")
    p.add_argument("partition")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--glyph", action="store_true")
    p.set_defaults(func=cmd_core_quotient)

    p = sub.add_parser("uglov", parents=[common], help="apply the l-to-m runner exchange")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--components", default="", help="components separated by ';', e.g. '1,1;;'")
    p.add_argument("--charges", default="", help="comma separated charges")
    p.add_argument("--json", default=None, help='{"components": [...], "charges": [...]}')
    p.add_argument("--glyph", action="store_true")
    p.set_defaults(func=cmd_uglov)

    p = sub.add_parser("abacus", parents=[common], help="render an m-runner abacus")
    p.add_argument("partition")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--window", default=None, help="runner positions LO:HI")
    p.add_argument("--glyph", action="store_true")
    p.set_defaults(func=cmd_abacus)

    p = sub.add_parser("hc-series", parents=[common], help="partitions of n with m-core mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", default="")
    p.set_defaults(func=cmd_hc_series)

    p = sub.add_parser("verify", help="brute-force verifications")
    vsub = p.add_subparsers(dest="check", required=True)
    report = argparse.ArgumentParser(add_help=False, parents=[common])
    report.add_argument("--out", default=None, help="also write JSON lines to this file")

    v = vsub.add_parser("uglov", parents=[report])
    v.add_argument("--l", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--kmax", type=int, required=True)
    v.add_argument("--window", type=int, required=True)
    v.set_defaults(func=cmd_verify_uglov, verify=True)

    v = vsub.add_parser("duality", parents=[report])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--l", type=int, required=True)
    v.add_argument("--lambda", dest="lam", default="")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--mu", default="")
    v.add_argument("--shift-bound", type=int, default=None)
    v.add_argument("--w-l", default=None, help="e.g. '(1,0,0,-1)o[1032]'")
    v.add_argument("--w-m", default=None)
    v.set_defaults(func=cmd_verify_duality, verify=True)

    v = vsub.add_parser("sweep", parents=[report])
    v.add_argument("--nmax", type=int, required=True)
    v.add_argument("--nmin", type=int, default=1)
    v.add_argument("--pairs", default="2,3;3,2;3,4;4,3")
    v.add_argument("--shift-bound", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify_sweep, verify=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        limits = config.load(
            args.config,
            max_partition_n=args.max_partition_n,
            max_multipartitions=args.max_multipartitions,
            max_affine=args.max_affine,
            shift_bound=getattr(args, "shift_bound", None),
        )
    except (LevelRankError, ValueError) as exc:
        print(f"levelrank: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config.set_limits(limits)
    if args.output is None:
        # verification reports default to JSON lines plus a summary
        args.output = "both" if getattr(args, "verify", False) else limits.output
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        print(f"levelrank: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except TheoremViolation as exc:
        print(_dump({"status": "FAIL", "reason": str(exc), "payload": exc.payload}))
        return EXIT_FAIL
    except (LevelRankError, ValueError) as exc:
        print(f"levelrank: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
