"""
Command-line interface.

Exit codes: 0 success, 2 invalid parameters, 3 unreadable input, 4 committee
enumeration over budget.
"""

import argparse
import logging
import sys
from fractions import Fraction

from abcratio.axioms import find_dominator
from abcratio.constructions import gen
from abcratio.core import BudgetExceeded, DomainError, InfeasibleError, ParameterError
from abcratio.exact import rule_score
from abcratio.guarantees import optima, ratio_report, table1_bounds
from abcratio.harness.experiment import load_config, run_experiment
from abcratio.harness.preflib import read_preflib, top_i_approvals
from abcratio.harness.profile_io import ParseError, format_profile, read_profile
from abcratio.rules import EXPERIMENT_RULES, compute, parse_rule

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


def _fmt(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator} ({float(value):.6f})"
    return str(value)


def _committee(text):
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParameterError(f"committee must list candidate indices, got {text!r}") from None


def _load(args):
    if args.top_i is not None:
        ballots, m = read_preflib(args.profile)
        return top_i_approvals(ballots, args.top_i, m)
    return read_profile(args.profile)


def cmd_winners(args, out):
    profile = _load(args)
    result = compute(args.rule, profile, args.k, budget=args.budget)
    print(f"rule: {result.rule}", file=out)
    if result.optimum is not None:
        print(f"score: {_fmt(result.optimum)}", file=out)
    for comm in result.winners:
        print(" ".join(map(str, comm)), file=out)


def cmd_score(args, out):
    profile = _load(args)
    comm = _committee(args.committee)
    if len(set(comm)) != len(comm):
        raise ParameterError(f"committee {comm} repeats a candidate")
    print(_fmt(rule_score(parse_rule(args.rule).base, profile, comm)), file=out)


def cmd_ratios(args, out):
    profile = _load(args)
    rules = [parse_rule(r) for r in args.rules] if args.rules else list(EXPERIMENT_RULES)
    optimal = optima(profile, args.k, args.budget)
    print("rule,av_ratio,cc_ratio", file=out)
    for rule in rules:
        report = ratio_report(rule, profile, args.k, optimal=optimal, budget=args.budget)
        print(f"{rule},{report.av_ratio},{report.cc_ratio}", file=out)


def cmd_experiment(args, out):
    config = load_config(args.config)
    if args.workers is not None:
        config.workers = args.workers
    result = run_experiment(config)
    csv_text = result.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        out.write(csv_text)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(result.summary_csv())
    print(f"kept {result.kept} of {result.total} instances", file=sys.stderr)


def cmd_check_efficiency(args, out):
    profile = _load(args)
    comm = _committee(args.committee)
    if len(set(comm)) != args.k or len(comm) != args.k:
        raise ParameterError(f"committee {comm} does not have {args.k} distinct members")
    witness = find_dominator(profile, comm, args.k, args.budget)
    if witness is None:
        print("efficient", file=out)
    else:
        print(
            "dominated by " + " ".join(map(str, witness.dominator))
            + f" (voter {witness.strictly_better_voter} strictly better off)",
            file=out,
        )


def cmd_construct(args, out):
    profile, spec = gen(args.family, args.k, args.x, args.p)
    out.write(format_profile(profile))
    rules = ", ".join(str(r) for r in spec.subject_rules)
    print(
        f"{spec.family.value}: {spec.target.upper()}-ratio of {rules} "
        f"{'=' if spec.relation == 'equal' else '<='} {spec.expected_ratio}",
        file=sys.stderr,
    )


def cmd_bounds(args, out):
    rule = args.rule
    if args.p is not None and rule.strip().lower() in ("pgeometric", "geometric", "p-geometric"):
        rule = f"pgeometric:{args.p}"
    av, cc = table1_bounds(rule, args.k)
    print(f"av_guarantee {av.lower:.12g} {av.upper:.12g}", file=out)
    print(f"cc_guarantee {cc.lower:.12g} {cc.upper:.12g}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="abcratio", description="Approval-based committee rules and their AV/CC ratios."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    parser.add_argument("--budget", type=int, default=None, help="committee enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def profile_args(p):
        p.add_argument("profile", help="profile file (plain format, or PrefLib with --top-i)")
        p.add_argument("--top-i", type=int, default=None, help="read PrefLib and approve the top i")

    p = sub.add_parser("winners", help="winning committees of a rule")
    p.add_argument("rule")
    profile_args(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(fn=cmd_winners)

    p = sub.add_parser("score", help="score of a committee under a rule")
    p.add_argument("rule")
    profile_args(p)
    p.add_argument("committee", help="candidate indices, e.g. 0,3,4")
    p.set_defaults(fn=cmd_score)

    p = sub.add_parser("ratios", help="AV- and CC-ratios of several rules")
    profile_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--rules", nargs="+", default=None)
    p.set_defaults(fn=cmd_ratios)

    p = sub.add_parser("experiment", help="run a ratio experiment from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.add_argument("--summary", default=None, help="quartile summary output path")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("check-efficiency", help="search for a dominating committee")
    profile_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("committee")
    p.set_defaults(fn=cmd_check_efficiency)

    p = sub.add_parser("construct", help="emit a worst-case profile")
    p.add_argument("family")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-p", type=Fraction, default=None)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("bounds", help="guarantee bounds of a rule")
    p.add_argument("rule")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-p", type=Fraction, default=None)
    p.set_defaults(fn=cmd_bounds)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        args.fn(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ParameterError, InfeasibleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
