"""Command-line front end for norms, the inclusion order and nilpotency certification.

Usage:
    schreier-cli norm --space b:2 --vec "1:1,2:1,3:1" --witness
    schreier-cli order l:1 c0
    schreier-cli certify --spec "L=2,3; M=1; N=1"
    schreier-cli --json trials --pair l:2,s:2 --n 10000 --seed 7

Exit codes:
    0: success
    1: a checked property was violated (the report is still printed)
    2: usage or parse error
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

from cli import __version__
from config import settings
from nilpotency.certifier import CertReport, certify
from nilpotency.index import nilpotency_index, witness_chain
from nilpotency.spec import format_spec, parse_spec
from norms.evaluator import NormValue, baernstein_norm, lp_norm, schreier_norm, sup_norm
from seqvec.schreier import SchreierChain, SchreierSet
from seqvec.vectors import format_vector, parse_vector
from spaces.inclusion import classify_pair, inclusion_constant
from spaces.labels import SpaceKind, SpaceLabel, parse_label
from spaces.order import compare, order_symbol
from utils.formatting import format_number, to_json
from utils.logging_config import configure_logging
from verify.blocks import domination_probe
from verify.trials import (
    TrialReport,
    check_jameson,
    check_rearrangement,
    run_inclusion_trials,
    run_oracle_check,
    write_ratios_csv,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _emit(args: argparse.Namespace, payload, lines: Sequence[str]) -> None:
    if args.json:
        print(to_json(payload))
    else:
        print("\n".join(lines))


def _format_witness(witness: Optional[Union[SchreierSet, SchreierChain]]) -> str:
    if witness is None:
        return "none"
    if isinstance(witness, SchreierSet):
        return "{" + ", ".join(str(n) for n in witness.indices) + "}"
    return "[" + ", ".join(_format_witness(F) for F in witness.sets) + "]"


def _report_lines(report: TrialReport) -> List[str]:
    lines = [f"check: {report.check}"]
    if report.source is not None and report.source != report.target:
        lines.append(f"pair: {report.source} -> {report.target}")
    elif report.source is not None:
        lines.append(f"space: {report.source}")
    if report.constant is not None:
        lines.append(f"constant: {format_number(report.constant)}")
    lines += [
        f"trials: {report.trials}",
        f"violations: {report.violations}",
        f"max_ratio: {format_number(report.max_ratio)}",
        f"worst_input: {format_vector(report.worst_input) if report.worst_input else 'none'}",
        f"seed: {report.seed}",
        "PASS" if report.passed else "FAIL",
    ]
    return lines


def _finish_report(args: argparse.Namespace, report: TrialReport) -> int:
    _emit(args, report, _report_lines(report))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_norm(args: argparse.Namespace) -> int:
    label = parse_label(args.space)
    x = parse_vector(args.vec)
    if label.kind is SpaceKind.BP:
        result = baernstein_norm(x, label.parameter)
    elif label.kind is SpaceKind.SP:
        result = schreier_norm(x, label.parameter)
    elif label.kind is SpaceKind.LP:
        result = NormValue(value=lp_norm(x, label.parameter))
    else:
        result = NormValue(value=sup_norm(x))

    payload = {"space": str(label), "value": result.value}
    lines = [f"{label.display()} norm: {format_number(result.value)}"]
    if args.witness:
        payload["witness"] = result.witness.model_dump(mode="json") if result.witness else None
        lines.append(f"witness: {_format_witness(result.witness)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    label = parse_label(args.space)
    report = run_oracle_check(label, args.max_support, args.trials, args.seed)
    return _finish_report(args, report)


def cmd_order(args: argparse.Namespace) -> int:
    first, second = parse_label(args.first), parse_label(args.second)
    ordering = compare(first, second)
    payload = {"first": str(first), "second": str(second), "ordering": ordering.value}
    _emit(args, payload, [f"{first} {order_symbol(ordering)} {second}"])
    return EXIT_OK


def cmd_constant(args: argparse.Namespace) -> int:
    source, target = parse_label(args.source), parse_label(args.target)
    answer = inclusion_constant(source, target)
    if not answer.comparable:
        lines = [f"{source} does not precede {target}: no formal inclusion"]
    else:
        lines = [f"C({source}, {target}) <= {format_number(answer.constant)}"]
        for link in answer.route:
            lines.append(
                f"  {link.link.value}: {link.source} -> {link.target}, "
                f"C = {format_number(link.constant)}"
            )
        lines.append(f"strictly singular: {answer.strictly_singular}")
    _emit(args, answer, lines)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    source, target = parse_label(args.source), parse_label(args.target)
    result = classify_pair(source, target)
    lines = [
        f"{source.display()} -> {target.display()}",
        f"formal inclusion: {result.formal_inclusion.value}",
        f"inclusion strictly singular: {result.inclusion_strictly_singular.value}",
        f"inclusion compact: {result.inclusion_compact.value}",
        f"strictly singular non-compact operators: "
        f"{result.strictly_singular_noncompact_operators.value}",
        f"all operators compact: {result.all_operators_compact.value}",
    ]
    lines += [f"note: {note}" for note in result.notes]
    _emit(args, result, lines)
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    k = nilpotency_index(spec)
    payload = {"spec": format_spec(spec), "k": k, "nilpotency_index": k + 1}
    _emit(args, payload, [f"k={k}", f"nilpotent of index {k + 1}"])
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    chain = witness_chain(spec)
    payload = {
        "spec": format_spec(spec),
        "k": len(chain) - 1,
        "chain": [str(label) for label in chain],
    }
    _emit(args, payload, [" ≺ ".join(label.display() for label in chain)])
    return EXIT_OK


def _cert_lines(report: CertReport) -> List[str]:
    checks = {
        "all length k+2 paths forced": report.all_long_paths_forced,
        "longest rule-free path has length k+1": report.index_matches_counting_bound,
        "witness chain rule-free": report.witness_rule_free,
        "witness chain strictly increasing": report.witness_strictly_increasing,
        "witness links strictly singular": report.witness_links_strictly_singular,
        "maximal path rule-free": report.max_path_rule_free,
    }
    lines = [
        f"spec: {format_spec(report.spec)}",
        f"canonical: {format_spec(report.canonical_spec)}",
        f"k={report.k} (nilpotent of index {report.nilpotency_index})",
        "witness: " + " ≺ ".join(label.display() for label in report.witness_chain),
    ]
    if report.exhaustive_paths_checked is not None:
        lines.append(f"paths checked: {report.exhaustive_paths_checked}")
    else:
        lines.append("paths checked: counting bound")
    lines += [f"{name}: {'ok' if value else 'FAILED'}" for name, value in checks.items()]
    if report.unforced_path is not None:
        lines.append("unforced path: " + ", ".join(str(label) for label in report.unforced_path))
    lines.append("PASS" if report.passed else "FAIL")
    return lines


def cmd_certify(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    report = certify(spec, exhaustive_limit=args.exhaustive_limit, workers=args.workers)
    _emit(args, report, _cert_lines(report))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _parse_pair(text: str) -> List[SpaceLabel]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected <label>,<label>, got {text!r}")
    return [parse_label(part) for part in parts]


def cmd_trials(args: argparse.Namespace) -> int:
    source, target = _parse_pair(args.pair)
    report = run_inclusion_trials(source, target, args.n, args.seed)
    if args.csv:
        write_ratios_csv(report, Path(args.csv))
    return _finish_report(args, report)


def cmd_jameson(args: argparse.Namespace) -> int:
    return _finish_report(args, check_jameson(args.p, args.q, args.n, args.seed))


def cmd_rearrange_check(args: argparse.Namespace) -> int:
    return _finish_report(args, check_rearrangement(args.p, args.n, args.seed))


def cmd_probe(args: argparse.Namespace) -> int:
    witness = domination_probe(args.p, args.q, args.blocks, args.C, args.budget, args.seed)
    if witness is None:
        payload = {"p": args.p, "q": args.q, "found": False}
        _emit(args, payload, [f"none found within budget {args.budget}"])
        return EXIT_OK

    lines = [
        f"counterexample ({witness.profile} profile)",
        "coefficients: " + ", ".join(format_number(a) for a in witness.coefficients),
        f"B_{args.p:g} norm: {format_number(witness.source_norm)}",
        f"B_{args.q:g} norm: {format_number(witness.target_norm)}",
        f"ratio: {format_number(witness.ratio)}",
    ]
    payload = {"found": True, **witness.model_dump(mode="json")}
    _emit(args, payload, lines)
    # B_p -> B_q is bounded with constant 1 for p <= q
    if args.p <= args.q and args.C >= 1.0:
        return EXIT_VIOLATION
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "norm": cmd_norm,
    "oracle-check": cmd_oracle_check,
    "order": cmd_order,
    "constant": cmd_constant,
    "classify": cmd_classify,
    "index": cmd_index,
    "witness": cmd_witness,
    "certify": cmd_certify,
    "trials": cmd_trials,
    "jameson": cmd_jameson,
    "rearrange-check": cmd_rearrange_check,
    "probe": cmd_probe,
}


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)

    def default(value):
        return argparse.SUPPRESS if suppress else value

    common.add_argument("--json", action="store_true", default=default(False),
                        help="Print JSON instead of text")
    common.add_argument("--seed", type=int, default=default(settings.DEFAULT_SEED),
                        help="Seed of randomized checks (default: derived from the arguments)")
    common.add_argument("--verbose", "-v", action="store_true", default=default(False),
                        help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schreier-cli",
        description="Schreier and Baernstein norms, inclusion order and nilpotency certification",
        parents=[_common_options(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common_options(suppress=True)]

    p = sub.add_parser("norm", parents=common, help="Norm of a vector in a space")
    p.add_argument("--space", required=True, help="Space label: l:p, b:p, s:p or c0")
    p.add_argument("--vec", required=True, help='Vector, e.g. "1:1,3:-2" or JSON')
    p.add_argument("--witness", action="store_true", help="Show the attaining set or chain")

    p = sub.add_parser("oracle-check", parents=common, help="Fast norm against brute force")
    p.add_argument("--space", required=True, help="s:p or b:p")
    p.add_argument("--max-support", type=int, required=True, help="Largest support index")
    p.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)

    for name, help_text in (
        ("order", "Compare two labels"),
        ("constant", "Inclusion constant and route"),
        ("classify", "Known operator facts for a pair"),
    ):
        p = sub.add_parser(name, parents=common, help=help_text)
        p.add_argument("first" if name == "order" else "source")
        p.add_argument("second" if name == "order" else "target")

    for name, help_text in (("index", "Nilpotency index"), ("witness", "Witness chain")):
        p = sub.add_parser(name, parents=common, help=help_text)
        p.add_argument("--spec", required=True, help='e.g. "L=2,3; M=1; N=1,2; c0=false"')

    p = sub.add_parser("certify", parents=common, help="Certify the nilpotency index")
    p.add_argument("--spec", required=True)
    p.add_argument("--exhaustive-limit", type=int, default=settings.EXHAUSTIVE_LIMIT)
    p.add_argument("--workers", type=int, default=settings.WORKERS)

    p = sub.add_parser("trials", parents=common, help="Randomized inclusion inequality trials")
    p.add_argument("--pair", required=True, help="<label>,<label>")
    p.add_argument("--n", type=int, default=settings.DEFAULT_TRIALS)
    p.add_argument("--csv", help="Write (trial, ratio) rows to this file")

    p = sub.add_parser("jameson", parents=common, help="Dyadic block bounds for S_p -> l_q")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--n", type=int, default=settings.DEFAULT_TRIALS)

    p = sub.add_parser("rearrange-check", parents=common, help="Rearrangement monotonicity")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--n", type=int, default=settings.DEFAULT_TRIALS)

    p = sub.add_parser("probe", parents=common, help="Search for a domination failure")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--blocks", type=int, required=True)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--budget", type=int, default=100)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging("DEBUG" if args.verbose else settings.LOG_LEVEL, settings.LOG_FILE)
    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
