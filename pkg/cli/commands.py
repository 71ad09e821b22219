"""Subcommand handlers.

Each handler reads its inputs through `formats`, calls library operations
and records what they returned in a CommandReport. Exit codes: 0 when the
property holds, 1 when it fails, 2 for unusable input.
"""

import logging
from collections.abc import Callable
from pathlib import Path

from categories.isomorphism import find_category_isomorphism
from categories.sfs import parallel_pair, verify_sfs
from categories.structures import SfsCategory
from constructions.freyd import build_freyd_quotient
from constructions.schutzenberger import build_d_category
from constructions.sigma import UcCtsfs, certify_sfs, sigma_monoid, unit_is_identity
from corpus import build_example, list_examples
from corpus.builders import ExampleBundle
from formats.text import (
    dump_category,
    dump_map,
    dump_semigroup,
    read_category,
    read_map,
    read_semigroup,
    write_text,
)
from models.budget import SearchBudget
from models.errors import (
    INPUT_ERRORS,
    AlgebraError,
    InvalidHomomorphism,
    ParamOutOfRange,
    PreconditionFailed,
)
from models.schemas import Command, CommandReport, Subcommand
from morita.equivalence import decide_morita
from semigroups.homomorphisms import check_homomorphism
from semigroups.structures import FiniteSemigroup, Homomorphism
from two_cells.conjugations import enumerate_conjugations, invert_conjugation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _budget(command: Command) -> SearchBudget:
    return SearchBudget(command.budget, label=command.subcommand.value)


def _require_inputs(command: Command, count: int) -> list[str]:
    if len(command.inputs) != count:
        raise PreconditionFailed(f"{command.subcommand.value} takes {count} input file(s)")
    return command.inputs


def _emit(report: CommandReport, command: Command, text: str) -> None:
    """Write a dump to --out when given, otherwise attach it to the report body."""
    if command.out:
        write_text(command.out, text)
        report.add("written", command.out)
    else:
        report.body = text


# =============================================================================
# Category Commands
# =============================================================================

def check_sfs(command: Command) -> CommandReport:
    """Certificate of a category file, one verdict per axiom with witnesses."""
    (path,) = _require_inputs(command, 1)
    sfs = read_category(path)
    report = CommandReport(command=command.subcommand)
    certificate = certify_sfs(sfs)

    thin_failures = [name for name, ok in (("E", certificate.thin_e), ("M", certificate.thin_m)) if not ok]
    thin = "PASS" if not thin_failures else f"FAIL ({', '.join(thin_failures)})"
    report.add("unique factorization", _verdict(certificate.unique_factorization), verdict=True)
    report.add("thin", thin, verdict=True)
    report.add("unital", _verdict(certificate.unital), verdict=True)
    report.add("complete", _verdict(certificate.complete), verdict=True)

    if not certificate.unique_factorization:
        for violation in verify_sfs(sfs).violations[:3]:
            report.add(f"witness {violation.check}", f"{violation.witness} {violation.detail}".strip())
    for name, sub in (("E", sfs.e_arrows), ("M", sfs.m_arrows)):
        pair = parallel_pair(sub)
        if pair is not None:
            report.add(f"witness thin {name}", f"parallel arrows {pair[0]} and {pair[1]}")
    if certificate.unit is not None:
        report.add("unit", certificate.unit)

    report.exit_code = EXIT_OK if certificate.all_pass else EXIT_FALSE
    return report


def d_category(command: Command) -> CommandReport:
    """Build D(S) and dump it with labelled triples."""
    (path,) = _require_inputs(command, 1)
    semigroup = read_semigroup(path)
    d = build_d_category(semigroup, check_witnesses=command.debug_witness_check or None)
    report = CommandReport(command=command.subcommand)
    report.add("objects", d.cat.object_count)
    report.add("arrows", d.cat.arrow_count)
    _emit(report, command, dump_category(d))
    return report


def freyd(command: Command) -> CommandReport:
    """Build the Freyd quotient and compare it with D(M)."""
    (path,) = _require_inputs(command, 1)
    monoid = read_semigroup(path)
    quotient = build_freyd_quotient(monoid)
    d = build_d_category(monoid, check_witnesses=command.debug_witness_check or None)
    found = find_category_isomorphism(quotient, d.cat, _budget(command))
    report = CommandReport(command=command.subcommand)
    report.add("quotient arrows", quotient.arrow_count)
    report.add("D(S) arrows", d.cat.arrow_count, name="d_arrows")
    report.add("isomorphic to D(S)", "yes" if found else "no", verdict=True, name="isomorphic")
    _emit(report, command, dump_category(quotient))
    report.exit_code = EXIT_OK if found else EXIT_FALSE
    return report


def sigma(command: Command) -> CommandReport:
    """Certify a category and emit the reconstructed monoid."""
    (path,) = _require_inputs(command, 1)
    certified = UcCtsfs.certify(read_category(path))
    monoid = sigma_monoid(certified)
    report = CommandReport(command=command.subcommand)
    report.add("unit", certified.zeta)
    report.add("size", monoid.size)
    _emit(report, command, dump_semigroup(monoid))
    return report


def roundtrip(command: Command) -> CommandReport:
    """Check that Sigma(D(M)) reproduces M."""
    (path,) = _require_inputs(command, 1)
    monoid = read_semigroup(path)
    identical = unit_is_identity(monoid)
    report = CommandReport(command=command.subcommand)
    report.add("Σ∘D = Id", "table identical" if identical else "table differs", verdict=True, name="roundtrip")
    report.exit_code = EXIT_OK if identical else EXIT_FALSE
    return report


# =============================================================================
# Two-cell and Morita Commands
# =============================================================================

def _read_hom(source: FiniteSemigroup, target: FiniteSemigroup, path: str) -> Homomorphism:
    h = Homomorphism(source, target, read_map(path))
    if not check_homomorphism(h):
        raise InvalidHomomorphism(f"{path} does not describe a homomorphism")
    return h


def conjugations(command: Command) -> CommandReport:
    """List every conjugation f => g, marking the invertible ones."""
    source_path, target_path = _require_inputs(command, 2)
    if not (command.f_map and command.g_map):
        raise PreconditionFailed("conjugations needs --f and --g map files")
    source, target = read_semigroup(source_path), read_semigroup(target_path)
    f = _read_hom(source, target, command.f_map)
    g = _read_hom(source, target, command.g_map)

    found = enumerate_conjugations(f, g)
    report = CommandReport(command=command.subcommand)
    report.add("conjugations", len(found), verdict=True)
    for conjugation in found:
        inverse = invert_conjugation(conjugation)
        label = target.label(conjugation.alpha)
        if inverse is None:
            report.add("alpha", f"{label} non-invertible")
        else:
            report.add("alpha", f"{label} invertible, beta = {target.label(inverse.beta)}")
    report.exit_code = EXIT_OK if found else EXIT_FALSE
    return report


def morita(command: Command) -> CommandReport:
    """Decide Morita equivalence and print the enlargement witness."""
    first_path, second_path = _require_inputs(command, 2)
    first, second = read_semigroup(first_path), read_semigroup(second_path)
    witness = decide_morita(first, second, _budget(command))
    report = CommandReport(command=command.subcommand)
    if witness is None:
        report.add("morita", "not equivalent", verdict=True)
        report.exit_code = EXIT_FALSE
        return report
    holder = first if witness.side == "source" else second
    report.add("morita", "equivalent", verdict=True)
    report.add("side", witness.side)
    report.add("idempotent", holder.label(witness.idempotent))
    report.add("corner", " ".join(str(x) for x in witness.corner_elements))
    report.add("isomorphism", " ".join(str(x) for x in witness.isomorphism))
    return report


# =============================================================================
# Corpus Commands
# =============================================================================

def _bundle_files(bundle: ExampleBundle) -> dict[str, str]:
    files = {f"{name}.sgp": dump_semigroup(s) for name, s in bundle.semigroups.items()}
    files.update({f"{name}.map": dump_map(h) for name, h in bundle.homomorphisms.items()})
    return files


def corpus(command: Command) -> CommandReport:
    """`corpus list` or `corpus dump <name> [params...]`."""
    if not command.inputs:
        raise PreconditionFailed("corpus needs 'list' or 'dump <name>'")
    action, args = command.inputs[0], command.inputs[1:]
    report = CommandReport(command=command.subcommand)

    if action == "list":
        for info in list_examples():
            parts = [info.kind.value] + [f"[{low}..{high}]" for low, high in info.param_bounds]
            report.add(info.name, " ".join(parts + [info.description]))
        return report
    if action != "dump" or not args:
        raise PreconditionFailed("corpus needs 'list' or 'dump <name>'")

    try:
        params = [int(p) for p in args[1:]]
    except ValueError:
        raise ParamOutOfRange(f"parameters must be integers: {args[1:]}") from None
    value = build_example(args[0], *params)

    if isinstance(value, ExampleBundle):
        files = _bundle_files(value)
        if value.elements:
            holder = next(iter(value.homomorphisms.values())).target
            for name, element in value.elements.items():
                report.add(name, holder.label(element))
        if command.out:
            directory = Path(command.out)
            directory.mkdir(parents=True, exist_ok=True)
            for name, text in files.items():
                write_text(directory / name, text)
            report.add("written", " ".join(files))
        else:
            report.body = "".join(f"# {name}\n{text}" for name, text in files.items())
        return report

    text = dump_category(value) if isinstance(value, SfsCategory) else dump_semigroup(value)
    _emit(report, command, text)
    return report


HANDLERS: dict[Subcommand, Callable[[Command], CommandReport]] = {
    Subcommand.CHECK_SFS: check_sfs,
    Subcommand.D_CATEGORY: d_category,
    Subcommand.FREYD: freyd,
    Subcommand.SIGMA: sigma,
    Subcommand.ROUNDTRIP: roundtrip,
    Subcommand.CONJUGATIONS: conjugations,
    Subcommand.MORITA: morita,
    Subcommand.CORPUS: corpus,
}


def execute(command: Command) -> CommandReport:
    """Run one command, turning library errors into an exit code and an error line."""
    try:
        return HANDLERS[command.subcommand](command)
    except INPUT_ERRORS as exc:
        code = EXIT_INPUT
        error = exc
    except OSError as exc:
        code = EXIT_INPUT
        error = exc
    except AlgebraError as exc:
        code = EXIT_FALSE
        error = exc
    logger.warning("%s failed: %s", command.subcommand.value, error)
    report = CommandReport(command=command.subcommand, exit_code=code)
    report.add("error", f"{type(error).__name__}: {error}", verdict=True)
    return report
