"""Command-line front end.

Exit codes for ``decide``: 0 has the zero weight, 1 does not, 2 not a
two-factor module; parse and usage errors exit with 64.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import root_data
from .criteria import (
    Decomposable,
    NotTwoFactor,
    classify_two_factor,
    decide_shape,
    minimal_dominant_weight,
)
from .oracle import module_dominant_weights
from .root_data import LieType
from .sweep import (
    DEFAULT_PRIMES,
    DEFAULT_TYPES,
    SweepConfig,
    check_an5,
    check_radical_tables,
    check_inequality_table,
    run_sweep,
)
from .weights import Weight, is_dominant, parse_coeffs

SCHEMA = 1
EX_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _emit(payload: dict, compact: bool = False) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload, ensure_ascii=False, indent=None if compact else 2))


def _instance(args) -> tuple[LieType, int, Weight]:
    if args.max_rank is not None:
        root_data.set_max_rank(args.max_rank)
    try:
        t = LieType.parse(args.type)
        w = parse_coeffs(t, args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.p < 2 or any(args.p % q == 0 for q in range(2, int(args.p ** 0.5) + 1)):
        raise UsageError(f"--p must be prime, got {args.p}")
    if not is_dominant(w):
        raise UsageError(f"weight must be dominant, got {args.weight}")
    return t, args.p, w


def cmd_decide(args) -> int:
    t, p, w = _instance(args)
    try:
        shape = classify_two_factor(t, p, w)
    except NotTwoFactor as exc:
        _emit({"two_factor": False, "reason": exc.reason}, args.json)
        return 2
    decision = decide_shape(shape)
    _emit({"shape": shape.to_dict(), **decision.to_dict()}, args.json)
    return 0 if decision.has_zero_weight else 1


def cmd_classify(args) -> int:
    t, p, w = _instance(args)
    try:
        shape = classify_two_factor(t, p, w)
    except NotTwoFactor as exc:
        _emit({"two_factor": False, "reason": exc.reason}, args.json)
        return 2
    _emit({"two_factor": True, **shape.to_dict()}, args.json)
    return 0


def cmd_oracle(args) -> int:
    t, p, w = _instance(args)
    try:
        ws = module_dominant_weights(t, p, w)
        wmin = minimal_dominant_weight(t, p, w)
    except (ValueError, Decomposable) as exc:
        _emit({"error": str(exc)}, args.json)
        return 2
    _emit({**ws.to_dict(), "minimal": list(wmin.coeffs)}, args.json)
    return 0


def cmd_an5(args) -> int:
    res = check_an5(args.max_rank or 8)
    ok = all(res.values())
    if args.json:
        _emit({"all_pass": ok, "types": res}, True)
    else:
        for name, good in res.items():
            print(f"{name:4s} {'pass' if good else 'FAIL'}")
        print(f"minor inequality: {'all pass' if ok else 'FAILURES'}")
    return 0 if ok else 1


def _tables_report(max_rank: int) -> dict:
    n2, bad2 = check_radical_tables(min(max_rank, 5))
    n1, bad1 = check_inequality_table(min(max_rank, 5))
    return {"radical_table": {"checked": n2, "mismatches": bad2},
            "inequality_table": {"checked": n1, "mismatches": bad1}}


def cmd_tables(args) -> int:
    rep = _tables_report(args.max_rank or 5)
    ok = all(v["mismatches"] == 0 for v in rep.values())
    if args.json:
        _emit({"all_pass": ok, **rep}, True)
    else:
        for name, v in rep.items():
            print(f"{name}: {v['checked']} checked, {v['mismatches']} mismatches")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    try:
        types = [LieType.parse(s) for s in args.types.split(",")]
        primes = [int(s) for s in args.primes.split(",")]
        cfg = SweepConfig(types, primes, args.max_i, not args.no_i0, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    start = time.perf_counter()
    an5 = check_an5(8)
    tables = _tables_report(5)
    sweep = run_sweep(cfg)
    elapsed = time.perf_counter() - start
    ok = (all(an5.values()) and all(v["mismatches"] == 0 for v in tables.values())
          and not sweep.disagreements)
    if args.json:
        _emit({"all_pass": ok, "an5": all(an5.values()), **tables,
               "sweep": sweep.to_dict()}, True)
    else:
        print(f"minor inequality (ranks <= 8): {'pass' if all(an5.values()) else 'FAIL'}")
        for name, v in tables.items():
            print(f"{name}: {v['checked']} checked, {v['mismatches']} mismatches")
        print(f"sweep: {sweep.instances} two-factor instances, {sweep.agreements} agree, "
              f"{len(sweep.disagreements)} disagree ({sweep.skipped} candidates skipped)")
        for d in sweep.disagreements:
            print(f"  DISAGREE {json.dumps(d)}")
        print(f"elapsed {elapsed:.1f}s")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wzk", description="Zero weight in two-factor irreducible modules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, instance=True):
        if instance:
            sp.add_argument("type", help="FAMILY:RANK, e.g. C:3")
            sp.add_argument("--p", type=int, required=True, help="characteristic (prime)")
            sp.add_argument("--weight", required=True, help="comma-separated coefficients")
        sp.add_argument("--json", action="store_true", help="compact JSON output")
        sp.add_argument("--max-rank", type=int, default=None, help="rank cap / sweep bound")

    common(sub.add_parser("decide", help="decide the zero weight for a two-factor module"))
    common(sub.add_parser("classify", help="classify the tensor shape"))
    common(sub.add_parser("oracle", help="dominant weights of an indecomposable module"))
    common(sub.add_parser("an5", help="minor inequality over all types"), instance=False)
    common(sub.add_parser("tables", help="check the explicit tables"), instance=False)
    v = sub.add_parser("verify", help="criterion versus oracle sweep")
    common(v, instance=False)
    v.add_argument("--types", default=",".join(DEFAULT_TYPES))
    v.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    v.add_argument("--max-i", type=int, default=2)
    v.add_argument("--no-i0", action="store_true", help="skip the i=0 exceptional shapes")
    v.add_argument("--workers", type=int, default=1)
    return parser


COMMANDS = {
    "decide": cmd_decide,
    "classify": cmd_classify,
    "oracle": cmd_oracle,
    "an5": cmd_an5,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"wzk: error: {exc}", file=sys.stderr)
        return EX_USAGE
    finally:
        root_data.set_max_rank(None)


if __name__ == "__main__":
    sys.exit(main())
