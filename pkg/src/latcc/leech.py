"""The Leech lattice as a three-level Construction C⋆ over the Golay code.

The 72-bit code has C₁ = {0, 1²⁴}, C₂ = Golay and C₃ = F₂²⁴, with the
parity of the third block tied to the bit of the first.
"""
from typing import List, Optional, Tuple

import numpy as np
from attr import attrs

from .codes import GOLAY_LENGTH, even_parity, golay24, golay_parity_check
from .config import DEFAULT_SETTINGS, Settings
from .constructions import associated_construction_c, construction_c_star
from .errors import DimensionMismatchError
from .geometry import DensityReport, leech_min_norm, packing_density
from .gf2 import (
    BitWord,
    LayeredCode,
    antiprojection_zero,
    dual,
    projection_code,
    weight_distribution,
)
from .latticeness import (
    Decomposition,
    LatticeVerdict,
    SchurWitness,
    carry_sum,
    schur_closure_witness,
    theorem2_check,
)

__all__ = [
    "ASSOCIATED_DENSITY_PUBLISHED",
    "Check",
    "LeechReport",
    "SchurCheck",
    "build_leech_layered_code",
    "closure_spot_check",
    "leech_verify",
]

LEVELS = 3
ASSOCIATED_DENSITY_PUBLISHED = 0.00012
GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
SPOT_CHECK_TRIALS = 10_000


def build_leech_layered_code(odd_leader: Optional[BitWord] = None) -> LayeredCode:
    """The Leech code of rank 36 and length 72.

    Args:
        odd_leader: odd-weight word coupled to the first block's all-ones word in
            the third block; e₁ by default.  Every choice gives the same code.
    """
    n = GOLAY_LENGTH
    if odd_leader is None:
        odd_leader = BitWord.unit(n, 0)
    odd_leader = BitWord(odd_leader)
    if len(odd_leader) != n or odd_leader.weight % 2 == 0:
        raise DimensionMismatchError(
            f"the coset leader must be an odd-weight word of length {n}"
        )
    zero = BitWord.zeros(n)
    generators = [BitWord.join([BitWord.ones(n), zero, odd_leader])]
    generators += [
        BitWord.join([zero, row, zero]) for row in golay24().reduced_generators
    ]
    generators += [
        BitWord.join([zero, zero, row]) for row in even_parity(n).reduced_generators
    ]
    return LayeredCode.from_generators(generators, n, LEVELS)


@attrs(frozen=True, auto_attribs=True)
class Check:
    """A named pass/fail entry of a verification report."""

    name: str
    passed: bool
    detail: str = ""


@attrs(frozen=True, auto_attribs=True)
class SchurCheck:
    """Schur closure of C_{level-1} into S_level(0, …, 0)."""

    level: int
    passed: bool
    pairs_checked: int
    witness: Optional[SchurWitness] = None


@attrs(frozen=True, auto_attribs=True)
class LeechReport:
    """Everything leech_verify establishes about the Leech Construction C⋆.

    Attributes:
        golay_checks: rank, minimum weight, weight distribution, self-duality and
            the parity-check identities of the Golay code.
        chain_checks: C₁ ⊆ S₂(0) ⊆ C₂ ⊆ S₃(0) ⊆ C₃.
        schur_checks: generator-pair Schur closure at levels 2 and 3.
        lattice: the structural latticeness verdict.
        min_norm_sq: exact minimum squared norm.
        min_norm_witness: a point of that norm.
        density: packing density of the constellation.
        associated_density: packing density of the associated Construction C.
        caveat: note on the published associated density.
        spot_check: closure of random pairs of points under addition.
    """

    golay_checks: List[Check]
    chain_checks: List[Check]
    schur_checks: List[SchurCheck]
    lattice: LatticeVerdict
    min_norm_sq: int
    min_norm_witness: Decomposition
    density: DensityReport
    associated_density: DensityReport
    caveat: str
    spot_check: Check

    @property
    def verdict(self) -> bool:
        """All chain and Schur checks pass and the structural verdict is lattice."""
        return (
            all(check.passed for check in self.chain_checks)
            and all(check.passed for check in self.schur_checks)
            and self.lattice.is_lattice is True
        )


def _golay_checks(settings: Settings) -> List[Check]:
    golay = golay24()
    parity = golay_parity_check().astype(np.int64)
    generators = golay.basis.astype(np.int64)
    ones = np.ones(GOLAY_LENGTH, dtype=np.int64)
    distribution = weight_distribution(golay, settings)
    return [
        Check("rank 12", golay.rank == 12, str(golay.rank)),
        Check(
            "minimum weight 8",
            min(w for w in distribution if w) == 8,
            str(min(w for w in distribution if w)),
        ),
        Check(
            "weight distribution",
            distribution == GOLAY_WEIGHTS,
            ", ".join(f"{w}:{c}" for w, c in sorted(distribution.items())),
        ),
        Check("self-dual", dual(golay) == golay),
        Check("H·1ᵀ = 0", not ((parity @ ones) % 2).any()),
        Check(
            "H·gᵀ = 0 for every generator",
            not ((parity @ generators.T) % 2).any(),
        ),
        Check(
            "generators have even weight",
            not (generators.sum(axis=1) % 2).any(),
        ),
    ]


def _chain_checks(layered: LayeredCode) -> List[Check]:
    c1, c2, c3 = (projection_code(layered, i) for i in (1, 2, 3))
    s2, s3 = antiprojection_zero(layered, 2), antiprojection_zero(layered, 3)
    return [
        Check("C1 ⊆ S2(0,0)", c1.is_subcode_of(s2)),
        Check("S2(0,0) ⊆ C2", s2.is_subcode_of(c2)),
        Check("C2 ⊆ S3(0,0)", c2.is_subcode_of(s3)),
        Check("S3(0,0) ⊆ C3", s3.is_subcode_of(c3)),
    ]


def _schur_checks(layered: LayeredCode) -> List[SchurCheck]:
    checks = []
    for level in (2, 3):
        witness, pairs = schur_closure_witness(
            projection_code(layered, level - 1),
            antiprojection_zero(layered, level),
            level,
        )
        checks.append(SchurCheck(level, witness is None, pairs, witness))
    return checks


def leech_verify(settings: Settings = DEFAULT_SETTINGS) -> LeechReport:
    """Build the Leech code and run every check on it."""
    layered = build_leech_layered_code()
    min_norm, witness = leech_min_norm()
    density = packing_density(construction_c_star(layered, settings), min_norm)
    associated = packing_density(associated_construction_c(layered, settings))
    caveat = (
        f"associated construction C density computes to "
        f"{associated.packing_density:.6g} (d²={associated.min_distance_sq}, "
        f"M=2^{associated.points_per_period.bit_length() - 1}); the published "
        f"figure {ASSOCIATED_DENSITY_PUBLISHED} is not reproduced"
    )
    rng = np.random.default_rng(settings.seed)
    failures = closure_spot_check(layered, SPOT_CHECK_TRIALS, rng)
    spot_check = Check(
        "random sums stay in the lattice",
        not failures,
        f"{len(failures)} of {SPOT_CHECK_TRIALS} pairs escaped",
    )
    return LeechReport(
        golay_checks=_golay_checks(settings),
        chain_checks=_chain_checks(layered),
        schur_checks=_schur_checks(layered),
        lattice=theorem2_check(layered),
        min_norm_sq=min_norm,
        min_norm_witness=witness,
        density=density,
        associated_density=associated,
        caveat=caveat,
        spot_check=spot_check,
    )


def closure_spot_check(
    layered: LayeredCode, trials: int, rng: np.random.Generator
) -> List[Tuple[Decomposition, Decomposition]]:
    """Add random pairs of points and return those whose sum leaves the code.

    Points are random codewords plus translates in {-1, 0, 1}ⁿ; the sum is taken
    with carry_sum and its blocks tested for membership.
    """
    words = layered.code.random_codeword_array(2 * trials, rng)
    translates = rng.integers(-1, 2, size=(2 * trials, layered.block_length))
    points = [
        Decomposition(layered.split(word), translate)
        for word, translate in zip(words, translates)
    ]
    failures = []
    for left, right in zip(points[::2], points[1::2]):
        total = carry_sum(layered, left, right)
        if not layered.contains_blocks(total.codeword_blocks):
            failures.append((left, right))
    return failures
