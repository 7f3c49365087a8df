"""Builtin codes and the reproducible worked examples."""
import math
from typing import Callable, Dict, List, Tuple

from attr import attrs

from .codes import golay24
from .config import DEFAULT_SETTINGS, Settings
from .constructions import (
    associated_construction_c,
    construction_c_star,
    contains_point,
)
from .errors import UnknownCodeError
from .geometry import min_distance_sq, packing_density
from .gf2 import LayeredCode
from .latticeness import decide
from .leech import Check, build_leech_layered_code, leech_verify

__all__ = [
    "BUILTIN_NAMES",
    "EXAMPLE_NAMES",
    "ExampleResult",
    "builtin_code",
    "run_example",
]

EX1_WORDS = ("0000", "1001", "1010", "0011")
EX2_WORDS = ("0000", "0010", "1001", "1011")
EX5_WORDS = (
    "000000",
    "101101",
    "001011",
    "100110",
    "000010",
    "001001",
    "100100",
    "101111",
)
EX5_COSETS = [(0, 0), (1, 2), (2, 4), (3, 6), (4, 0), (5, 2), (6, 4), (7, 6)]

LEECH_DENSITY_PUBLISHED = 0.001929
LEECH_DENSITY_TOLERANCE = 1e-5
DENSITY_TOLERANCE = 1e-12


def _ex1() -> LayeredCode:
    return LayeredCode.from_words(EX1_WORDS, 2, 2)


def _ex2() -> LayeredCode:
    return LayeredCode.from_words(EX2_WORDS, 2, 2)


def _ex5() -> LayeredCode:
    return LayeredCode.from_words(EX5_WORDS, 2, 3)


def _golay() -> LayeredCode:
    return LayeredCode(golay24(), 24, 1)


_BUILTINS: Dict[str, Callable[[], LayeredCode]] = {
    "ex1": _ex1,
    "ex2": _ex2,
    "ex5": _ex5,
    "leech": build_leech_layered_code,
    "golay24": _golay,
}
BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_code(name: str) -> LayeredCode:
    """Look up an embedded layered code by name."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise UnknownCodeError(
            f"unknown builtin {name!r}, expected one of {', '.join(BUILTIN_NAMES)}"
        ) from None
    return factory()


@attrs(frozen=True, auto_attribs=True)
class ExampleResult:
    """Outcome of reproducing a worked example.

    Attributes:
        name: example name.
        checks: every computed value compared with its expected value.
        notes: extra lines to show, such as counterexamples and caveats.
        details: the underlying report objects, for JSON output.
    """

    name: str
    checks: List[Check]
    notes: List[str]
    details: Dict[str, object]

    @property
    def passed(self) -> bool:
        """Whether every check matched."""
        return all(check.passed for check in self.checks)


def _expect(name: str, actual, expected) -> Check:
    return Check(name, actual == expected, f"got {actual}, expected {expected}")


def _close(name: str, actual: float, expected: float, tolerance: float) -> Check:
    return Check(
        name,
        abs(actual - expected) <= tolerance,
        f"got {actual:.6f}, expected {expected:.6f} ± {tolerance:g}",
    )


def _run_ex1(settings: Settings) -> ExampleResult:
    layered = _ex1()
    verdict = decide(layered, settings=settings)
    constellation = construction_c_star(layered, settings)
    witness = verdict.witness
    total = getattr(witness, "total", None)
    checks = [
        _expect("lattice", verdict.is_lattice, False),
        _expect("method", verdict.method, "bruteforce"),
        _expect("precondition held", verdict.precondition_held, False),
        _expect(
            "witness",
            (getattr(witness, "left", None), getattr(witness, "right", None)),
            ((1, 2), (3, 0)),
        ),
        _expect("witness sum", total, (4, 2)),
        _expect(
            "sum excluded",
            total is not None and contains_point(constellation, total),
            False,
        ),
    ]
    return ExampleResult("ex1", checks, [verdict.reason], {"verdict": verdict})


def _run_ex2(settings: Settings) -> ExampleResult:
    layered = _ex2()
    verdict = decide(layered, settings=settings)
    star = packing_density(construction_c_star(layered, settings), settings=settings)
    associated = packing_density(
        associated_construction_c(layered, settings), settings=settings
    )
    checks = [
        _expect("lattice", verdict.is_lattice, True),
        _expect("method", verdict.method, "theorem2"),
        _expect("d² of C*", star.min_distance_sq, 4),
        _expect("d² of associated C", associated.min_distance_sq, 1),
        _close("density of C*", star.packing_density, math.pi / 4, DENSITY_TOLERANCE),
        _close(
            "density of associated C",
            associated.packing_density,
            math.pi / 8,
            DENSITY_TOLERANCE,
        ),
        _expect(
            "density ratio",
            star.center_density_exact / associated.center_density_exact,
            2,
        ),
    ]
    details = {"verdict": verdict, "density": star, "associated_density": associated}
    return ExampleResult("ex2", checks, [verdict.reason], details)


def _run_ex5(settings: Settings) -> ExampleResult:
    layered = _ex5()
    verdict = decide(layered, settings=settings)
    constellation = construction_c_star(layered, settings)
    d2, witness = min_distance_sq(constellation, settings)
    checks = [
        _expect("lattice", verdict.is_lattice, True),
        _expect("method", verdict.method, "bruteforce"),
        _expect("precondition held", verdict.precondition_held, False),
        _expect("cosets", constellation.sorted_cosets(), EX5_COSETS),
        _expect("d²", d2, 5),
        _expect("d² witness", witness, ((0, 0), (1, 2))),
    ]
    details = {"verdict": verdict, "min_distance_sq": d2, "witness": witness}
    return ExampleResult("ex5", checks, [verdict.reason], details)


def _run_leech(settings: Settings) -> ExampleResult:
    report = leech_verify(settings)
    checks: List[Check] = []
    checks += [
        Check(f"golay {check.name}", check.passed, check.detail)
        for check in report.golay_checks
    ]
    checks += [
        Check(f"chain {c.name}", c.passed, c.detail) for c in report.chain_checks
    ]
    checks += [
        Check(
            f"schur closure into S{c.level}",
            c.passed,
            f"{c.pairs_checked} generator pairs",
        )
        for c in report.schur_checks
    ]
    checks += [
        _expect("lattice", report.lattice.is_lattice, True),
        report.spot_check,
        _expect("minimum norm", report.min_norm_sq, 32),
        _expect("center density", report.density.center_density_exact, 1),
        _close(
            "density",
            report.density.packing_density,
            LEECH_DENSITY_PUBLISHED,
            LEECH_DENSITY_TOLERANCE,
        ),
    ]
    return ExampleResult("leech", checks, [report.caveat], {"leech": report})


_EXAMPLES: Dict[str, Callable[[Settings], ExampleResult]] = {
    "ex1": _run_ex1,
    "ex2": _run_ex2,
    "ex5": _run_ex5,
    "leech": _run_leech,
}
EXAMPLE_NAMES: Tuple[str, ...] = tuple(_EXAMPLES)


def run_example(name: str, settings: Settings = DEFAULT_SETTINGS) -> ExampleResult:
    """Reproduce a worked example and compare every number with its expected value."""
    try:
        runner = _EXAMPLES[name]
    except KeyError:
        raise UnknownCodeError(
            f"unknown example {name!r}, expected one of {', '.join(EXAMPLE_NAMES)}"
        ) from None
    return runner(settings)
