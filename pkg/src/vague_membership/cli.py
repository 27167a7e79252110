"""Command-line interface for vague-membership."""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from vague_membership.config import Config, LoggingConfig
from vague_membership.connectives import ConnectiveTriple, get_default_triple
from vague_membership.errors import (
    CrossPartitionError,
    PartitionValidationError,
    PreconditionError,
    VagueError,
)
from vague_membership.expr import parse
from vague_membership.factory import (
    configure_from_env,
    configure_logging,
    create_triple,
)
from vague_membership.formatter import (
    format_degree,
    format_diagnostics,
    format_estimate,
    format_judgement,
    format_level_set,
    format_space_report,
    format_validation,
    yes_no,
)
from vague_membership.inverse import (
    TargetVector,
    explain_infeasible,
    invert,
    invert_approx,
)
from vague_membership.measure import (
    Judgement,
    check_axioms,
    consistent_degree,
    derive_fuzzy_set,
    eval_measure,
    fs_combine,
    intuitionistic_pair,
    judge,
    separation,
    sharpness,
)
from vague_membership.partition import VaguePartition
from vague_membership.specio import (
    bundled_names,
    load_bundled,
    load_partition,
    write_report,
)

DEMOS = ("example51", "example44", "example45", "edgington", "intuitionistic")


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _load(
    args: argparse.Namespace, config: Config
) -> tuple[VaguePartition, ConnectiveTriple]:
    """Load the partition argument; ``--triple`` beats the document's triple."""
    source = args.partition_file
    tol = config.tolerance.boundary
    if not Path(source).exists() and source in bundled_names():
        partition, triple = load_bundled(source, get_default_triple(), tol)
    else:
        partition, triple = load_partition(Path(source), get_default_triple(), tol)
    if args.triple:
        triple = _triple(args, config)
    return partition, triple


def _triple(args: argparse.Namespace, config: Config) -> ConnectiveTriple:
    if not args.triple:
        return get_default_triple()
    evaluation = dataclasses.replace(config.evaluation, triple=args.triple)
    return create_triple(evaluation, config.tolerance)


def cmd_validate(args: argparse.Namespace, config: Config) -> int:
    """Print per-condition verdicts; exit 0 iff the document is a vague partition."""
    try:
        partition, _ = _load(args, config)
        report = partition.report
    except PartitionValidationError as err:
        report = err.report
    print(format_validation(report))
    if args.report:
        write_report(args.report, validation=report)
    return 0 if report.valid else 1


def cmd_eval(args: argparse.Namespace, config: Config) -> int:
    if args.judgement:
        if not args.expr:
            raise PreconditionError("--judgement needs --expr")
        pairs = TargetVector.from_pairs(args.judgement).specified
        j = Judgement.from_degrees(pairs)
        triple = _triple(args, config)
    else:
        if args.partition_file is None or args.x is None:
            raise PreconditionError("eval needs a partition file and --x")
        partition, triple = _load(args, config)
        j = judge(partition, args.x)
    if args.expr:
        e = parse(args.expr)
        print(format_degree(eval_measure(j, triple, e)))
    else:
        print(format_judgement(j))
    if args.report:
        write_report(
            args.report,
            extra={"judgement": {"x": j.x, "degrees": dict(j.degrees)}},
        )
    return 0


def cmd_invert(args: argparse.Namespace, config: Config) -> int:
    """Print the objects matching the targets; exit 1 when there are none."""
    partition, _ = _load(args, config)
    targets = TargetVector.from_pairs(args.targets)
    if args.tol > 0:
        result = invert_approx(partition, targets, args.tol)
    else:
        result = invert(partition, targets)
    print(format_level_set(result))
    if result.is_empty:
        print("diagnostics:")
        print(format_diagnostics(explain_infeasible(partition, targets)))
    if args.report:
        write_report(
            args.report,
            extra={
                "inversion": {
                    "targets": targets.specified,
                    "tolerance": args.tol,
                    "solution": [[p.lo, p.hi] for p in result],
                }
            },
        )
    return 1 if result.is_empty else 0


def cmd_measure(args: argparse.Namespace, config: Config) -> int:
    partition, triple = _load(args, config)
    grid_step = (
        args.grid_step if args.grid_step is not None else config.evaluation.grid_step
    )
    if args.axioms is not None:
        report = check_axioms(
            judge(partition, args.axioms), triple, config.tolerance.boundary
        )
        print(format_space_report(report))
        if args.report:
            write_report(args.report, space=report)
        return 0 if report.axiom1 and report.axiom5 else 1

    extra = {}
    if args.sharpness is not None:
        estimate = sharpness(partition, triple, args.sharpness)
        print(format_estimate("sharpness", estimate))
        extra["sharpness"] = estimate.value
    elif args.separation:
        estimate = separation(partition, triple, grid_step)
        print(format_estimate("separation", estimate))
        extra["separation"] = estimate.value
    else:
        a, b = (parse(text) for text in args.consistency)
        estimate = consistent_degree(partition, triple, a, b, grid_step)
        print(format_estimate("consistent degree", estimate))
        incompatible = estimate.value <= config.tolerance.boundary
        print(f"incompatible: {yes_no(incompatible)}")
        extra["consistent_degree"] = estimate.value
    extra["exact"] = estimate.exact
    if args.report:
        write_report(args.report, extra=extra)
    return 0


def _compare(label: str, expected: float, computed: float) -> str:
    return (
        f"{label}: expected {format_degree(expected)}, "
        f"computed {format_degree(computed)}"
    )


def _demo_example51(triple: ConnectiveTriple) -> list[str]:
    partition, _ = load_bundled("height_nl_2006")
    j = judge(partition, 1.5)
    targets = TargetVector({"short": 0.0, "medium": 0.4, "tall": 0.6})
    return [
        f"partition {partition.concept}/{partition.attribute}: "
        f"valid {yes_no(partition.report.valid)}, regular {yes_no(partition.regular)}",
        _compare("short(1.5)", 0.625, j.degrees["short"]),
        _compare("medium(1.5)", 0.375, j.degrees["medium"]),
        _compare("tall(1.5)", 0.0, j.degrees["tall"]),
        f"invert short=0 medium=0.4 tall=0.6: expected x = 1.92, computed "
        f"{format_level_set(invert(partition, targets))}",
    ]


def _demo_example44(triple: ConnectiveTriple) -> list[str]:
    blocks = ["b0_40", "b40_80", "b80_120", "b120_160", "b160_200"]
    j = Judgement.from_degrees(
        {name: float(i == 0) for i, name in enumerate(blocks)}, x=25
    )
    report = check_axioms(j, triple)
    return [
        "crisp partition of [0, 200] into five intervals, x = 25",
        f"judgement: {format_judgement(j)}",
        format_space_report(report),
        "expected: regular yes, normal yes",
    ]


def _demo_example45(triple: ConnectiveTriple) -> list[str]:
    j = Judgement.from_degrees({"young": 0.6, "old": 0.4}, x=35)
    report = check_axioms(j, triple)
    return [
        f"x = 35, judgement: {format_judgement(j)}",
        _compare("M(young | old)", 0.6, eval_measure(j, triple, "young | old")),
        _compare("M(!old)", 0.6, eval_measure(j, triple, "!old")),
        format_space_report(report),
        "expected: regular yes, normal no",
    ]


# (colour position, diameter) of the three balls
_BALLS = {"a": (1.0, 5.0), "b": (3.0, 5.0), "c": (3.0, 8.0)}


def _demo_edgington(triple: ConnectiveTriple) -> list[str]:
    colour, _ = load_bundled("ball_color")
    size, _ = load_bundled("ball_size")
    red = derive_fuzzy_set(colour, triple, "red")
    small = derive_fuzzy_set(size, triple, "small")
    lines = []
    try:
        fs_combine(red, small, "and")
        lines.append("combination accepted (unexpected)")
    except CrossPartitionError as err:
        lines.append(f"red & small rejected: {err}")

    lines.append("forced evaluation with min/max on the two separate degrees:")
    expected_and = {"a": 0.5, "b": 0.5, "c": 0.0}
    expected_or = {"a": 1.0, "b": 0.5, "c": 0.5}
    for ball, (hue, diameter) in _BALLS.items():
        r, s = red(hue), small(diameter)
        lines.append(
            f"  ball {ball}: R={format_degree(r)} S={format_degree(s)}; "
            + _compare("(R∩S)", expected_and[ball], min(r, s))
            + "; "
            + _compare("(R∪S)", expected_or[ball], max(r, s))
        )
    return lines


def _demo_intuitionistic(triple: ConnectiveTriple) -> list[str]:
    partition, _ = load_bundled("height_nl_2006")
    medium = derive_fuzzy_set(partition, triple, "medium")
    lines = []
    for x in (1.51, 1.92):
        mu, nu = intuitionistic_pair(medium, x)
        lines.append(
            f"x = {x}: mu={format_degree(mu)} (expected 0.4), "
            f"nu={format_degree(nu)} (expected 0.6); "
            f"judgement {format_judgement(judge(partition, x))}"
        )
    lines.append(
        "the (mu, nu) pairs coincide, so the pair alone cannot tell the two "
        "heights apart; the full judgements over short/medium/tall can"
    )
    return lines


_DEMOS = {
    "example51": _demo_example51,
    "example44": _demo_example44,
    "example45": _demo_example45,
    "edgington": _demo_edgington,
    "intuitionistic": _demo_intuitionistic,
}


def cmd_demo(args: argparse.Namespace, config: Config) -> int:
    for line in _DEMOS[args.name](_triple(args, config)):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vague-membership",
        description="Vague partitions, membership measures and fuzzy sets",
    )
    parser.add_argument(
        "--triple", help="negation,tnorm,tconorm (default: document, then env)"
    )
    parser.add_argument("--report", help="Write a machine report (.vreport.json)")
    parser.add_argument(
        "--grid-step", type=_positive_float, help="Step for grid fall-backs"
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level on stderr (default: VAGUE_LOG_LEVEL or WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Validate command
    validate_parser = subparsers.add_parser("validate", help="Validate a partition")
    validate_parser.add_argument("partition_file", help="Path or bundled name")

    # Eval command
    eval_parser = subparsers.add_parser(
        "eval", help="Judge an object or evaluate an expression"
    )
    eval_parser.add_argument("partition_file", nargs="?", help="Path or bundled name")
    eval_parser.add_argument("--x", type=float, help="Object to judge")
    eval_parser.add_argument("--expr", "-e", help="Expression to evaluate")
    eval_parser.add_argument(
        "--judgement",
        nargs="+",
        metavar="NAME=DEGREE",
        help="Evaluate against a direct judgement instead of a partition",
    )

    # Invert command
    invert_parser = subparsers.add_parser(
        "invert", help="Find the objects with given degrees"
    )
    invert_parser.add_argument("partition_file", help="Path or bundled name")
    invert_parser.add_argument("targets", nargs="+", metavar="NAME=DEGREE")
    invert_parser.add_argument(
        "--tol",
        type=_nonnegative_float,
        default=0.0,
        help="Degree tolerance (default 0: exact)",
    )

    # Measure command
    measure_parser = subparsers.add_parser(
        "measure", help="Sharpness, separation, consistency or axioms"
    )
    measure_parser.add_argument("partition_file", help="Path or bundled name")
    quantity = measure_parser.add_mutually_exclusive_group(required=True)
    quantity.add_argument("--sharpness", type=float, metavar="X")
    quantity.add_argument("--separation", action="store_true")
    quantity.add_argument("--consistency", nargs=2, metavar=("A", "B"))
    quantity.add_argument("--axioms", type=float, metavar="X")

    # Demo command
    demo_parser = subparsers.add_parser("demo", help="Run a worked example")
    demo_parser.add_argument("name", choices=DEMOS)

    return parser


_COMMANDS = {
    "validate": cmd_validate,
    "eval": cmd_eval,
    "invert": cmd_invert,
    "measure": cmd_measure,
    "demo": cmd_demo,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI.

    Returns:
        0 on success, 1 on a negative verdict, 2 on bad input.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2

    try:
        # Configure defaults from environment variables
        config = configure_from_env()
        configure_logging(LoggingConfig(args.log_level or config.logging.level))
        return _COMMANDS[args.command](args, config)
    except (VagueError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
