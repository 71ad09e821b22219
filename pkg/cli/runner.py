"""Argument parsing, report rendering and the process entry point."""

import argparse
import logging
import sys

import config
from cli.commands import EXIT_INPUT, execute
from models.schemas import Command, CommandReport, OutputFormat, Subcommand

logger = logging.getLogger(__name__)

_INPUTS = {
    Subcommand.CHECK_SFS: ("category", "category file"),
    Subcommand.D_CATEGORY: ("semigroup", "semigroup or transformations file"),
    Subcommand.FREYD: ("monoid", "monoid or transformations file"),
    Subcommand.SIGMA: ("category", "category file of a unital, complete and thin SFS"),
    Subcommand.ROUNDTRIP: ("monoid", "monoid or transformations file"),
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="Write the produced structure to this path (a directory for bundles)")
    common.add_argument("--debug-witness-check", action="store_true",
                        help="Evaluate every witness of every D-category composite")
    common.add_argument("--budget", type=int, help="Candidate budget for searches")
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.TEXT.value, help="text (default) or machine key=value lines")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="sfs",
        description="Schützenberger categories, strict factorization systems and Morita equivalence of finite monoids",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for subcommand, (metavar, help_text) in _INPUTS.items():
        p = sub.add_parser(subcommand.value, parents=[common], help=help_text)
        p.add_argument("inputs", nargs=1, metavar=metavar)

    p = sub.add_parser(Subcommand.CONJUGATIONS.value, parents=[common],
                       help="List conjugations f => g between two homomorphisms")
    p.add_argument("inputs", nargs=2, metavar="semigroup")
    p.add_argument("--f", dest="f_map", required=True, help="Map file of f")
    p.add_argument("--g", dest="g_map", required=True, help="Map file of g")

    p = sub.add_parser(Subcommand.MORITA.value, parents=[common], help="Decide Morita equivalence of two monoids")
    p.add_argument("inputs", nargs=2, metavar="monoid")

    p = sub.add_parser(Subcommand.CORPUS.value, parents=[common], help="List or dump built-in examples")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("args", nargs="*", metavar="name-and-params")
    return parser


def parse_command(argv: list[str]) -> Command:
    """Parse arguments into a Command.

    Raises:
        SystemExit: with status 2 on invalid arguments
    """
    args = build_parser().parse_args(argv)
    subcommand = Subcommand(args.subcommand)
    if subcommand is Subcommand.CORPUS:
        inputs = [args.action] + args.args
    else:
        inputs = list(args.inputs)
    return Command(
        subcommand=subcommand,
        inputs=inputs,
        out=args.out,
        debug_witness_check=args.debug_witness_check,
        budget=args.budget,
        output_format=OutputFormat(args.output_format),
        f_map=getattr(args, "f_map", None),
        g_map=getattr(args, "g_map", None),
    )


def render(report: CommandReport, output_format: OutputFormat = OutputFormat.TEXT) -> str:
    """Text puts verdicts on one '; '-joined line, then one 'key: value' per line.

    Machine output is one 'key=value' per line. A dumped body follows either form.
    """
    if output_format is OutputFormat.MACHINE:
        out = [f"{line.machine_key}={line.value}" for line in report.lines]
        out.append(f"exit_code={report.exit_code}")
    else:
        verdicts = [f"{line.key}: {line.value}" for line in report.lines if line.verdict]
        out = ["; ".join(verdicts)] if verdicts else []
        out.extend(f"{line.key}: {line.value}" for line in report.lines if not line.verdict)
    text = "\n".join(out)
    if report.body:
        text = f"{text}\n{report.body}" if text else report.body
    return text if text.endswith("\n") else text + "\n"


def configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(argv: list[str] | None = None) -> int:
    """Parse, execute, print and return the exit code."""
    configure_logging()
    try:
        command = parse_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    report = execute(command)
    sys.stdout.write(render(report, command.output_format))
    return report.exit_code
