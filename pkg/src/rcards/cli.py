"""Command-line interface.

Exit status: 0 when every requested property holds, 1 when one fails (a
witness is printed), 2 on usage, input or budget errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TextIO

from .audit import necessary_condition_audit
from .core import BudgetExceeded, DealSpec, fmt_hand, fmt_rational, make_hand
from .designs import (
    DesignError,
    cyclic_design,
    example4_family,
    orbit_strategy,
    strategy_from_designs,
    sts_construct,
)
from .fileio import ParseError, emit_designs, emit_strategy, parse_designs, parse_strategy
from .search import enumerate_designs, max_disjoint_family, min_informative_m
from .verify import (
    PreconditionError,
    communication_complexity,
    equitability,
    is_informative,
    is_optimal,
    lower_bound_m,
    perfect_security_check,
    posterior_hand_prob,
    prob_subset_held,
    weak_security_check,
)

PROPERTIES = ("informative", "equitable", "weak", "perfect", "optimal")


class UsageError(ValueError):
    pass


def _cards(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a list of integers, got {text!r}") from None


def _deal(text: str) -> DealSpec:
    try:
        return DealSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(args, text: str, out: TextIO) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _yes(flag: bool) -> str:
    return "yes" if flag else "NO"


def cmd_verify(args, out):
    S = parse_strategy(_read(args.strategy))
    delta = args.delta
    required = [p.strip() for p in args.require.split(",") if p.strip()]
    for p in required:
        if p not in PROPERTIES:
            raise UsageError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
    results = {}
    cc = communication_complexity(S)
    print(f"deal: {S.deal}, n={S.deal.n}", file=out)
    print(f"m={cc.m}", file=out)
    print(f"log2 m ~ {cc.bits:.6f} bits (approximate)", file=out)

    inf = is_informative(S)
    results["informative"] = inf.holds
    line = f"informative: {_yes(inf.holds)}"
    if not inf.holds:
        line += f" ({inf})"
    print(line, file=out)

    gamma = equitability(S)
    results["equitable"] = gamma is not None
    print(f"equitable: gamma={gamma}" if gamma is not None else "equitable: NO", file=out)

    weak = weak_security_check(S, delta)
    results["weak"] = weak.holds
    line = f"weak {delta}-secure: {_yes(weak.holds)}"
    if not weak.holds:
        line += f" (witness: {weak.witness})"
    print(line, file=out)

    perfect = perfect_security_check(S, delta)
    results["perfect"] = perfect.holds
    line = f"perfect {delta}-secure: {_yes(perfect.holds)}"
    if not perfect.holds:
        line += f" (witness: {perfect.witness})"
    print(line, file=out)

    if inf.holds:
        opt = is_optimal(S)
        results["optimal"] = opt
        print(f"optimal: {_yes(opt)} (lower bound {lower_bound_m(S.deal)})", file=out)
    else:
        results["optimal"] = False
        print("optimal: n/a (not informative)", file=out)
    return 0 if all(results[p] for p in required) else 1


def cmd_prob(args, out):
    S = parse_strategy(_read(args.strategy))
    i = args.announcement - 1
    cathy = make_hand(_cards(args.cathy), S.deal.n)
    if len(cathy) != S.deal.c:
        raise UsageError(f"Cathy holds {S.deal.c} cards, got {len(cathy)}")
    if args.alice:
        alice = make_hand(_cards(args.alice), S.deal.n)
        p = posterior_hand_prob(S, i, cathy, alice)
        print(f"Prob[H_A = {fmt_hand(alice)} | announcement {args.announcement}, H_C = {fmt_hand(cathy)}] = {fmt_rational(p)}", file=out)
        return 0
    if not args.subset:
        raise UsageError("give --subset (or --alice)")
    subset = make_hand(_cards(args.subset), S.deal.n)
    p = prob_subset_held(S, i, cathy, subset)
    print(f"Prob[{fmt_hand(subset)} held by Alice | announcement {args.announcement}, H_C = {fmt_hand(cathy)}] = {fmt_rational(p)}", file=out)
    return 0


def cmd_lower_bound(args, out):
    print(lower_bound_m(_deal(args.deal)), file=out)
    return 0


def cmd_construct(args, out):
    kind = args.kind
    if kind == "sts":
        _write(args, emit_designs([sts_construct(args.v)]), out)
    elif kind == "cyclic":
        bases = [_cards(b) for b in args.base]
        _write(args, emit_designs([cyclic_design(bases, args.mod)]), out)
    elif kind == "orbit":
        designs = parse_designs(_read(args.design))
        if len(designs) != 1:
            raise UsageError("orbit needs a file with exactly one design")
        res = orbit_strategy(designs[0], allow_large=args.allow_large)
        n = designs[0].v
        summary = [
            f"orbit: m={res.m} distinct designs, gamma={res.gamma}, |Aut|={res.aut_order}",
            f"identity m = gamma*(n-t): {res.m} = {res.gamma}*({n}-{res.t}) {'holds' if res.identity_holds else 'FAILS'}",
        ]
        note = res.discrepancy()
        if note:
            summary.append(f"note: {note}")
        text = "".join(f"# {s}\n" for s in summary) + emit_strategy(res.strategy)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            out.write("\n".join(summary) + "\n")
        else:
            out.write(text)
    elif kind == "example4":
        fam = example4_family()
        if args.designs:
            _write(args, emit_designs(fam), out)
        else:
            _write(args, emit_strategy(strategy_from_designs(fam, DealSpec(4, 3, 1), gamma=2)), out)
    elif kind == "from-designs":
        fam = [D for f in args.files for D in parse_designs(_read(f))]
        S = strategy_from_designs(fam, _deal(args.deal), gamma=args.gamma)
        _write(args, emit_strategy(S), out)
    return 0


def cmd_search(args, out):
    kind = args.kind
    if kind == "min-m":
        res = min_informative_m(_deal(args.deal), args.max)
        print(res.m if res.found else f"none <= {args.max}", file=out)
        for m, nodes in sorted(res.exhausted.items()):
            print(f"# m={m}: exhausted, {nodes} nodes", file=out)
        if res.found and args.out:
            Path(args.out).write_text(emit_strategy(res.strategy), encoding="utf-8")
        return 0 if res.found else 1
    if kind == "enumerate":
        designs = enumerate_designs(args.t, args.v, args.k)
        print(len(designs), file=out)
        if args.out:
            Path(args.out).write_text(emit_designs(designs), encoding="utf-8")
        return 0
    if kind == "disjoint":
        fam = [D for f in args.files for D in parse_designs(_read(f))]
        res = max_disjoint_family(fam)
        print(res.size, file=out)
        print(f"# members (1-based): {' '.join(str(i + 1) for i in res.indices)}", file=out)
        print(f"# upper bound from block count: {res.upper_bound}", file=out)
        if args.out:
            Path(args.out).write_text(emit_designs(list(res.family)), encoding="utf-8")
        return 0
    raise UsageError(f"unknown search {kind!r}")


def cmd_audit(args, out):
    S = parse_strategy(_read(args.strategy))
    report = necessary_condition_audit(S, args.delta, args.claim)
    for line in report.lines():
        print(line, file=out)
    print(f"violations: {len(report.violations)}", file=out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rcards", description="Russian cards strategies: verify, construct, search.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check informativeness, equitability, security and optimality")
    v.add_argument("--strategy", required=True)
    v.add_argument("--delta", type=int, default=1)
    v.add_argument("--require", default="informative,weak,perfect",
                   help="comma-separated properties that decide the exit status")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("prob", help="exact posterior probabilities from Cathy's view")
    pr.add_argument("--strategy", required=True)
    pr.add_argument("--announcement", type=int, required=True, help="1-based index")
    pr.add_argument("--cathy", required=True)
    pr.add_argument("--subset")
    pr.add_argument("--alice", help="report Prob[H_A = this hand] instead")
    pr.set_defaults(func=cmd_prob)

    lb = sub.add_parser("lower-bound", help="fewest announcements of an informative strategy")
    lb.add_argument("--deal", required=True)
    lb.set_defaults(func=cmd_lower_bound)

    c = sub.add_parser("construct", help="build designs and strategies")
    csub = c.add_subparsers(dest="kind", required=True)
    s = csub.add_parser("sts")
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--out")
    s = csub.add_parser("cyclic")
    s.add_argument("--base", action="append", required=True, help="base block, e.g. 0,1,3,9 (repeatable)")
    s.add_argument("--mod", type=int, required=True)
    s.add_argument("--out")
    s = csub.add_parser("orbit")
    s.add_argument("--design", required=True)
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("--out")
    s = csub.add_parser("example4")
    s.add_argument("--designs", action="store_true", help="emit the ten designs instead of the strategy")
    s.add_argument("--out")
    s = csub.add_parser("from-designs")
    s.add_argument("--files", nargs="+", required=True)
    s.add_argument("--deal", required=True)
    s.add_argument("--gamma", type=int, default=1)
    s.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    se = sub.add_parser("search", help="exhaustive searches")
    ssub = se.add_subparsers(dest="kind", required=True)
    s = ssub.add_parser("min-m")
    s.add_argument("--deal", required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--out", help="write the witness strategy here")
    s = ssub.add_parser("enumerate")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out")
    s = ssub.add_parser("disjoint")
    s.add_argument("--files", nargs="+", required=True)
    s.add_argument("--out")
    se.set_defaults(func=cmd_search)

    a = sub.add_parser("audit", help="check necessary conditions for secure strategies")
    a.add_argument("--strategy", required=True)
    a.add_argument("--delta", type=int)
    a.add_argument("--claim", choices=("perfect", "weak"), default="perfect")
    a.set_defaults(func=cmd_audit)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, UsageError, PreconditionError, DesignError, BudgetExceeded, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
