"""Main program implementation."""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from ._meta import __version__
from .catalog import BUILTIN_NAMES, EXAMPLE_NAMES, builtin_code, run_example
from .codefile import load
from .config import Settings
from .constructions import (
    associated_construction_c,
    construction_c_star,
    points_in_box,
)
from .errors import EnumerationCapError, ImplicitModeError, LatccError
from .frontend import BasicFrontend, ReportOnlyFrontend
from .geometry import (
    DensityReport,
    leech_min_norm,
    min_distance_sq,
    packing_density,
)
from .gf2 import LayeredCode, antiprojection_zero, is_product_code, projection_code
from .latticeness import METHODS, SchurWitness, decide
from .leech import build_leech_layered_code, leech_verify
from .report import Report
from .status import (
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_UNDECIDED,
)

EXAMPLE_STATUSES = {EXIT_OK: "pass", EXIT_NEGATIVE: "fail", EXIT_UNDECIDED: "undecided"}


class UsageError(LatccError):
    """Bad command-line arguments."""


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser which raises instead of exiting with status 2."""

    def error(self, message):
        """Report a usage error as an input error."""
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _layered_code(args, frontend: BasicFrontend) -> Tuple[str, LayeredCode]:
    """The code named by the file argument or ``--builtin``."""
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of a code file or --builtin")
    if args.builtin is not None:
        return f"builtin:{args.builtin}", builtin_code(args.builtin)
    code_file = load(args.file)
    if not args.quiet:
        frontend.print_code(Path(args.file).read_text(encoding="utf-8"))
    return args.file, code_file.to_layered_code()


def _star_min_distance(
    layered: LayeredCode, settings: Settings
) -> Tuple[int, Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    constellation = construction_c_star(layered, settings)
    if not constellation.is_explicit and layered == build_leech_layered_code():
        d2, witness = leech_min_norm()
        return d2, ((0,) * layered.block_length, witness.reconstruct())
    return min_distance_sq(constellation, settings)


def _format_witness(witness) -> str:
    if isinstance(witness, SchurWitness):
        product = f"{witness.left} ∗ {witness.right} = {witness.product}"
        return f"{product} (level {witness.level})"
    return f"{witness.left} + {witness.right} = {witness.total}"


def _print_density(frontend: BasicFrontend, name: str, density: DensityReport):
    exact = density.center_density_exact
    multiplier = f"V_{density.dimension} · {exact}" if exact is not None else ""
    frontend.heading(name)
    frontend.field("  d²", density.min_distance_sq)
    frontend.field("  points per period", density.points_per_period)
    frontend.field("  center density", f"{density.center_density:.6g}")
    frontend.field(
        "  packing density",
        f"{density.packing_density:.6g}" + (f" = {multiplier}" if multiplier else ""),
    )


def cmd_check(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Decide whether the Construction C⋆ of a code is a lattice."""
    subject, layered = _layered_code(args, frontend)
    frontend.log(
        f"n={layered.block_length} L={layered.levels} rank={layered.rank} "
        f"method={args.method} enumeration cap={settings.enum_cap}"
    )
    verdict = decide(layered, args.method, settings)
    labels = {True: "lattice", False: "not a lattice", None: "undecided"}
    frontend.verdict(verdict.is_lattice, labels[verdict.is_lattice], verdict.method)
    frontend.field("precondition held", verdict.precondition_held)
    if verdict.witness is not None:
        frontend.field("witness", _format_witness(verdict.witness))
    frontend.field("reason", verdict.reason)
    return Report("check", subject, verdict.status, verdict)


def cmd_density(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Packing densities of Construction C⋆ and the associated Construction C."""
    subject, layered = _layered_code(args, frontend)
    d2, _ = _star_min_distance(layered, settings)
    star = packing_density(construction_c_star(layered, settings), d2, settings)
    associated = packing_density(
        associated_construction_c(layered, settings), None, settings
    )
    ratio = star.packing_density / associated.packing_density
    exact_ratio = None
    if star.center_density_exact is not None and associated.center_density_exact:
        exact_ratio = star.center_density_exact / associated.center_density_exact
    _print_density(frontend, "construction C*", star)
    _print_density(frontend, "associated construction C", associated)
    frontend.field("ratio", f"{ratio:.6g}" if exact_ratio is None else exact_ratio)
    result = {
        "construction_c_star": star,
        "associated_construction_c": associated,
        "ratio": ratio,
        "ratio_exact": exact_ratio,
    }
    return Report("density", subject, "ok", result)


def cmd_min_distance(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Squared minimum distance of the Construction C⋆ and a pair achieving it."""
    subject, layered = _layered_code(args, frontend)
    d2, witness = _star_min_distance(layered, settings)
    frontend.field("d²", d2)
    frontend.field("witness", f"{witness[0]} {witness[1]}")
    result = {"min_distance_sq": d2, "witness": witness}
    return Report("min-distance", subject, "ok", result)


def cmd_construct(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Points of the Construction C⋆ in the box [-R, R]ⁿ."""
    subject, layered = _layered_code(args, frontend)
    radius = 2 ** layered.levels if args.points is None else args.points
    points = points_in_box(construction_c_star(layered, settings), radius, settings)
    lines = "".join(" ".join(str(x) for x in point) + "\n" for point in points)
    if args.output:
        Path(args.output).write_text(lines, encoding="utf-8")
        frontend.log(f"wrote {len(points)} points to {args.output}")
    elif not args.json:
        for line in lines.splitlines():
            frontend.print(line)
    result = {"radius": radius, "points": points}
    return Report("construct", subject, "ok", result)


def cmd_example(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Reproduce a worked example."""
    result = run_example(args.name, settings)
    frontend.heading(f"example {result.name}")
    for check in result.checks:
        frontend.verdict(check.passed, check.name, check.detail)
    for note in result.notes:
        if result.name == "leech":
            frontend.caveat(note)
        else:
            frontend.field("note", note)
    frontend.summary()
    status = EXAMPLE_STATUSES[frontend.tally.exit_code]
    return Report("example", args.name, status, result)


def cmd_leech(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Build the Leech lattice and run every check on it."""
    # pylint: disable=unused-argument
    report = leech_verify(settings)
    frontend.heading("golay code")
    for check in report.golay_checks:
        frontend.verdict(check.passed, check.name, check.detail)
    frontend.heading("chain")
    for check in report.chain_checks:
        frontend.verdict(check.passed, check.name)
    frontend.heading("schur closure")
    for schur in report.schur_checks:
        frontend.verdict(
            schur.passed,
            f"C{schur.level - 1} ∗ C{schur.level - 1} ⊆ S{schur.level}(0,0)",
            f"{schur.pairs_checked} generator pairs",
        )
    frontend.verdict(report.lattice.is_lattice, "lattice", report.lattice.method)
    frontend.verdict(
        report.spot_check.passed, report.spot_check.name, report.spot_check.detail
    )
    frontend.field("minimum norm", report.min_norm_sq)
    _print_density(frontend, "construction C*", report.density)
    _print_density(frontend, "associated construction C", report.associated_density)
    frontend.caveat(report.caveat)
    status = "pass" if report.verdict else "fail"
    return Report("leech", "builtin:leech", status, report)


def cmd_info(args, settings: Settings, frontend: BasicFrontend) -> Report:
    """Ranks of a layered code and its projection and antiprojection codes."""
    # pylint: disable=unused-argument
    subject, layered = _layered_code(args, frontend)
    levels = range(1, layered.levels + 1)
    projections = [projection_code(layered, i) for i in levels]
    zero_context = [antiprojection_zero(layered, i) for i in levels]
    chain = []
    for i in range(1, layered.levels):
        held = projections[i - 1].is_subcode_of(zero_context[i])
        chain.append((f"C{i} ⊆ S{i + 1}(0)", held))
    frontend.field("n", layered.block_length)
    frontend.field("L", layered.levels)
    frontend.field("rank", layered.rank)
    frontend.field("projection ranks", [code.rank for code in projections])
    frontend.field("antiprojection ranks", [code.rank for code in zero_context])
    frontend.field("product code", is_product_code(layered))
    for name, held in chain:
        frontend.field(name, "yes" if held else "no")
    result = {
        "block_length": layered.block_length,
        "levels": layered.levels,
        "rank": layered.rank,
        "projection_ranks": [code.rank for code in projections],
        "antiprojection_ranks": [code.rank for code in zero_context],
        "product_code": is_product_code(layered),
        "chain": dict(chain),
    }
    return Report("info", subject, "ok", result)


def _radius(value: str) -> int:
    try:
        radius = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid radius {value!r}") from None
    if radius < 0:
        raise argparse.ArgumentTypeError(f"radius must be nonnegative, got {radius}")
    return radius


def _add_code_arguments(parser):
    parser.add_argument("file", nargs="?", help="code file")
    parser.add_argument("--builtin", choices=BUILTIN_NAMES, help="use an embedded code")


def parse_args(argv: List[str]):
    """Parse latcc command-line arguments."""
    parser = ArgumentParser(
        prog="latcc",
        description="Lattice constructions from binary codes, with exact checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--json", action="store_true", help="print a canonical JSON report"
    )
    bell = parser.add_mutually_exclusive_group()
    bell.add_argument(
        "--bell", "-b", action="store_true", help="ring bell on a failed check"
    )
    bell.add_argument(
        "--no-bell",
        action="store_false",
        dest="bell",
        help="don't ring bell on a failed check (default)",
    )
    quiet = parser.add_mutually_exclusive_group()
    quiet.add_argument(
        "--quiet", "-q", action="store_true", help="hide log messages (default)"
    )
    quiet.add_argument(
        "--verbose",
        "-v",
        action="store_false",
        dest="quiet",
        help="show log messages and echo code files",
    )
    parser.set_defaults(quiet=True, bell=False)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    check = commands.add_parser("check", help="decide latticeness")
    _add_code_arguments(check)
    check.add_argument("--method", choices=METHODS, default="auto")
    check.set_defaults(run=cmd_check)

    density = commands.add_parser("density", help="packing densities")
    _add_code_arguments(density)
    density.set_defaults(run=cmd_density)

    distance = commands.add_parser("min-distance", help="squared minimum distance")
    _add_code_arguments(distance)
    distance.set_defaults(run=cmd_min_distance)

    construct = commands.add_parser("construct", help="list points in a box")
    _add_code_arguments(construct)
    construct.add_argument(
        "--points", type=_radius, metavar="R", help="box radius (default 2^L)"
    )
    construct.add_argument("--output", metavar="PATH", help="write points to a file")
    construct.set_defaults(run=cmd_construct)

    example = commands.add_parser("example", help="reproduce a worked example")
    example.add_argument("name", choices=EXAMPLE_NAMES)
    example.set_defaults(run=cmd_example)

    leech = commands.add_parser("leech", help="verify the Leech construction")
    leech.set_defaults(run=cmd_leech)

    info = commands.add_parser("info", help="describe a layered code")
    _add_code_arguments(info)
    info.set_defaults(run=cmd_info)

    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Handle command line arguments and return the exit code."""
    if argv is None:
        argv = sys.argv
    # Usage errors are reported before the options are parsed
    frontend = ReportOnlyFrontend() if "--json" in argv[1:] else BasicFrontend()
    try:
        args = parse_args(argv[1:])
        if args.json:
            frontend = ReportOnlyFrontend()
        else:
            frontend = BasicFrontend(quiet=args.quiet, bell_on_failure=args.bell)
        settings = Settings.from_env()
        report = args.run(args, settings, frontend)
    except (EnumerationCapError, ImplicitModeError) as e:
        frontend.error(str(e))
        return EXIT_UNDECIDED
    except LatccError as e:
        frontend.error(str(e))
        return EXIT_INPUT_ERROR
    if args.json:
        sys.stdout.write(report.to_json())
    return report.exit_code
