"""Command-line front end: ``schmidtnum {analyze,schmidt,sample,locc,paper-examples}``.

Exit codes: 0 success, 1 a built-in check failed, 2 bad input.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .bounds import analyze, locc_conversion_excluded
from .errors import InvalidInputError, NotDecidableError
from .generic import SamplerConfig, monte_carlo_theorem2
from .linalg import DEFAULT_TOL, ToleranceConfig
from .schmidt import schmidt_decomposition
from .states import WeightedEnsemble
from .worked_examples import run_checks

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the flags appear before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"relative singular-value cutoff (default {DEFAULT_TOL.rank_rel:g})")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="json", action="store_true", default=argparse.SUPPRESS)
    fmt.add_argument("--text", dest="json", action="store_false", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="schmidtnum", parents=[common],
                                     description="Schmidt-number bounds for low-rank bipartite states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="lower/upper Schmidt-number bounds for a state file")
    p.add_argument("path")

    p = sub.add_parser("schmidt", parents=[common], help="Schmidt decomposition of a pure state file")
    p.add_argument("path")

    p = sub.add_parser("sample", parents=[common], help="Monte-Carlo check of the generic bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("locc", parents=[common], help="can LOCC turn SOURCE into TARGET?")
    p.add_argument("source")
    p.add_argument("target")

    sub.add_parser("paper-examples", parents=[common], help="rebuild the built-in states and check them")
    return parser


def _emit(args, doc: dict, text: str) -> None:
    print(json.dumps(doc) if args.json else text)


def _report_text(rep) -> str:
    upper = "-" if rep.upper_bound is None else str(rep.upper_bound)
    return "\n".join([
        f"m: {rep.m}",
        f"n: {rep.n}",
        f"r: {rep.r}",
        f"t: {rep.t}",
        f"rank_T1: {rep.rank_T1}",
        f"rank_T2: {rep.rank_T2}",
        f"dim_LA: {rep.dim_LA}",
        f"dim_LB: {rep.dim_LB}",
        f"lower: {rep.lower_bound}",
        f"upper: {upper} ({rep.upper_source})",
        f"exact: {str(rep.exact).lower()}",
        f"member_schmidt_ranks: {list(rep.member_schmidt_ranks)}",
        f"tolerance: rank_rel={rep.tolerance.rank_rel:g} zero_abs={rep.tolerance.zero_abs:g}",
    ])


def cmd_analyze(args, tol) -> int:
    rep = analyze(io.parse_state_file(args.path), tol)
    _emit(args, io.report_to_dict(rep), _report_text(rep))
    return EXIT_OK


def cmd_schmidt(args, tol) -> int:
    state = io.parse_state_file(args.path)
    if not isinstance(state, WeightedEnsemble) or state.t != 1:
        raise InvalidInputError("not a pure state")
    dec = schmidt_decomposition(state.states[0], tol)
    coeffs = [float(c) for c in dec.coefficients]
    doc = {"schema_version": io.SCHEMA_VERSION, "type": "schmidt_report", "rank": dec.rank,
           "coefficients": coeffs, "tolerance": tol.as_dict()}
    text = f"rank: {dec.rank}\ncoefficients: [{', '.join(f'{c:.4f}' for c in coeffs)}]"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_sample(args, tol) -> int:
    config = SamplerConfig(args.m, args.n, args.r, args.trials, args.seed)
    summary = monte_carlo_theorem2(config, tol)
    text = (f"m={config.m} n={config.n} r={config.r} seed={config.seed}: "
            f"{summary.successes}/{summary.trials} pass (bound >= {summary.required_bound}, "
            f"n/r = {summary.bound_quotient:g}), min bound {summary.min_observed_bound}, "
            f"full-rank T2 fraction {summary.full_rank_fraction:g}, failures {list(summary.failures)}")
    _emit(args, io.summary_to_dict(summary), text)
    return EXIT_OK if not summary.failures else EXIT_CHECK_FAILED


def cmd_locc(args, tol) -> int:
    src = analyze(io.parse_state_file(args.source), tol)
    tgt = analyze(io.parse_state_file(args.target), tol)
    verdict = "excluded" if locc_conversion_excluded(src, tgt) else "undecided"
    doc = {"schema_version": io.SCHEMA_VERSION, "type": "locc_verdict", "verdict": verdict,
           "source": io.report_to_dict(src), "target": io.report_to_dict(tgt)}
    text = f"{verdict} (source upper {src.upper_bound}, target lower {tgt.lower_bound})"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_paper_examples(args, tol) -> int:
    rows = run_checks(tol)
    passed = all(row.passed for row in rows)
    doc = {"schema_version": io.SCHEMA_VERSION, "type": "check_table", "passed": passed,
           "tolerance": tol.as_dict(),
           "rows": [{"name": r.name, "expected": r.expected, "observed": r.observed, "passed": r.passed}
                    for r in rows]}
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: expected {r.expected}; got {r.observed}"
             for r in rows]
    lines.append(f"{sum(r.passed for r in rows)}/{len(rows)} checks passed")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if passed else EXIT_CHECK_FAILED


COMMANDS = {
    "analyze": cmd_analyze,
    "schmidt": cmd_schmidt,
    "sample": cmd_sample,
    "locc": cmd_locc,
    "paper-examples": cmd_paper_examples,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        tol = ToleranceConfig(rank_rel=args.tol) if hasattr(args, "tol") else DEFAULT_TOL
        return COMMANDS[args.command](args, tol)
    except (InvalidInputError, NotDecidableError, OSError) as exc:
        print(f"schmidtnum {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
