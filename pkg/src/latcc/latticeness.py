"""Deciding whether a constellation is a lattice.

Three routes are available: the structural check on Schur products for
Construction C⋆ (through the antiprojections S_i(0, …, 0)), the classical Schur
closure check for nested Construction C, and a brute-force test of closure under
addition of the explicit coset set.  The carry formula expressing the sum of two
multi-level points level by level is also here.
"""
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

import attr
from attr import attrs

from .config import DEFAULT_SETTINGS, Settings
from .constructions import Constellation, construction_c_star, contains_point
from .errors import DimensionMismatchError, ImplicitModeError, InapplicableError
from .gf2 import (
    BitWord,
    LayeredCode,
    LinearCode,
    antiprojection_zero,
    projection_code,
)

__all__ = [
    "CarryState",
    "CarrySum",
    "Decomposition",
    "LatticeVerdict",
    "PointWitness",
    "SchurWitness",
    "brute_force_is_lattice",
    "carry_state",
    "carry_sum",
    "corollary_check",
    "decide",
    "decompose",
    "schur_closure_witness",
    "theorem1_check",
    "theorem2_check",
]

Point = Tuple[int, ...]

THEOREM1 = "theorem1"
THEOREM2 = "theorem2"
BRUTEFORCE = "bruteforce"
METHODS = ("auto", THEOREM2, BRUTEFORCE)


def _words(blocks) -> Tuple[BitWord, ...]:
    return tuple(BitWord(b) for b in blocks)


def _ints(values) -> Point:
    return tuple(int(v) for v in values)


@attrs(frozen=True)
class Decomposition:
    """A point written as c₁ + 2c₂ + … + 2^{L-1}c_L + 2^L z.

    Attributes:
        blocks: (c₁, …, c_L), binary words of a common length n.
        translate: the integer vector z.
    """

    blocks: Tuple[BitWord, ...] = attr.ib(converter=_words)
    translate: Point = attr.ib(converter=_ints)

    def __attrs_post_init__(self):
        if not self.blocks:
            raise DimensionMismatchError("a decomposition needs at least one level")
        if any(len(b) != len(self.translate) for b in self.blocks):
            raise DimensionMismatchError(
                "blocks and translate must share a dimension"
            )

    @property
    def levels(self) -> int:
        """Number of levels L."""
        return len(self.blocks)

    @property
    def dimension(self) -> int:
        """Dimension n."""
        return len(self.translate)

    def reconstruct(self) -> Point:
        """The integer point Σ 2^{i-1} c_i + 2^L z."""
        point = [(2 ** self.levels) * z for z in self.translate]
        for level, block in enumerate(self.blocks):
            for j, bit in enumerate(block):
                point[j] += (2 ** level) * bit
        return tuple(point)


def decompose(point: Sequence[int], levels: int) -> Decomposition:
    """Write an integer point as its binary levels plus a translate.

    The translate is ⌊p / 2^L⌋, so ``decompose(p, L).reconstruct() == p``.
    """
    modulus = 2 ** levels
    residue = [x % modulus for x in point]
    blocks = [[(x >> level) & 1 for x in residue] for level in range(levels)]
    return Decomposition(blocks, [x // modulus for x in point])


@attrs(frozen=True, auto_attribs=True)
class CarryState:
    """Carries of the level-wise sum of two decompositions.

    Attributes:
        s: carry words s₁, …, s_L out of each level.
        r: ``r[(i, j)]`` is the word r_i^j (1 ≤ j < i ≤ L).
    """

    s: Tuple[BitWord, ...]
    r: Dict[Tuple[int, int], BitWord]


def carry_state(left: Sequence[BitWord], right: Sequence[BitWord]) -> CarryState:
    """Carry words for adding c₁ + 2c₂ + … and c̃₁ + 2c̃₂ + ….

    With g_i = c_i ∗ c̃_i and p_i = c_i ⊕ c̃_i:
    r_i^1 = p_i ∗ g_{i-1}, r_i^j = p_i ∗ r_{i-1}^{j-1} and
    s_i = g_i ⊕ r_i^1 ⊕ … ⊕ r_i^{i-1}.
    """
    generate = [c & d for c, d in zip(left, right)]
    propagate = [c ^ d for c, d in zip(left, right)]
    r: Dict[Tuple[int, int], BitWord] = {}
    s: List[BitWord] = []
    for i in range(1, len(left) + 1):
        carry = generate[i - 1]
        for j in range(1, i):
            if j == 1:
                term = propagate[i - 1] & generate[i - 2]
            else:
                term = propagate[i - 1] & r[(i - 1, j - 1)]
            r[(i, j)] = term
            carry = carry ^ term
        s.append(carry)
    return CarryState(tuple(s), r)


@attrs(frozen=True, auto_attribs=True)
class CarrySum:
    """The sum of two decompositions, in decomposed form."""

    sum: Decomposition
    state: CarryState

    @property
    def codeword_blocks(self) -> Tuple[BitWord, ...]:
        """Blocks c_i ⊕ c̃_i ⊕ s_{i-1} of the sum, with s₀ = 0."""
        return self.sum.blocks


def carry_sum(layered: LayeredCode, a: Decomposition, b: Decomposition) -> CarrySum:
    """Add two decompositions level by level.

    The blocks need not be codewords; the result always reconstructs to the
    integer sum of the inputs.

    Raises:
        DimensionMismatchError: if either decomposition does not have the layered
            code's block structure.
    """
    for operand in (a, b):
        if (
            operand.levels != layered.levels
            or operand.dimension != layered.block_length
        ):
            raise DimensionMismatchError(
                f"decomposition has {operand.levels} levels of length "
                f"{operand.dimension}, expected {layered.levels} of length "
                f"{layered.block_length}"
            )
    state = carry_state(a.blocks, b.blocks)
    blocks = [a.blocks[0] ^ b.blocks[0]]
    for level in range(1, layered.levels):
        blocks.append(state.s[level - 1] ^ a.blocks[level] ^ b.blocks[level])
    translate = [
        carry + z + w for carry, z, w in zip(state.s[-1], a.translate, b.translate)
    ]
    return CarrySum(Decomposition(blocks, translate), state)


@attrs(frozen=True, auto_attribs=True)
class PointWitness:
    """Two constellation points whose sum is not in the constellation."""

    left: Point
    right: Point

    @property
    def total(self) -> Point:
        """The escaping sum."""
        return tuple(a + b for a, b in zip(self.left, self.right))


@attrs(frozen=True, auto_attribs=True)
class SchurWitness:
    """Generators whose Schur product escapes the target code.

    Attributes:
        level: the (1-based) level of the target code.
        left: first generator.
        right: second generator.
    """

    level: int
    left: BitWord
    right: BitWord

    @property
    def product(self) -> BitWord:
        """left ∗ right."""
        return self.left & self.right


Witness = Union[PointWitness, SchurWitness]


@attrs(frozen=True, auto_attribs=True)
class LatticeVerdict:
    """Outcome of a latticeness decision.

    Attributes:
        is_lattice: True or False when decided, None when the method was silent.
        method: ``theorem2``, ``theorem1`` or ``bruteforce``.
        precondition_held: whether the method's premise held (None when the method
            has none).
        witness: counterexample backing a negative verdict.
        reason: one-line human-readable explanation.
    """

    is_lattice: Optional[bool]
    method: str
    precondition_held: Optional[bool] = None
    witness: Optional[Witness] = None
    reason: str = ""

    @property
    def status(self) -> str:
        """``lattice``, ``not-lattice`` or ``undecided``."""
        if self.is_lattice is None:
            return "undecided"
        return "lattice" if self.is_lattice else "not-lattice"


def schur_closure_witness(
    source: LinearCode, target: LinearCode, level: int
) -> Tuple[Optional[SchurWitness], int]:
    """Check that g ∗ g′ ∈ target for every pair of basis rows of ``source``.

    By bilinearity of ∗ and linearity of the target this is the same as closure
    for all pairs of codewords.

    Returns:
        (first failing pair in basis order or None, number of pairs checked).
    """
    if source.length != target.length:
        raise DimensionMismatchError("codes have different lengths")
    checked = 0
    for left, right in combinations_with_replacement(source.reduced_generators, 2):
        checked += 1
        if (left & right) not in target:
            return SchurWitness(level, left, right), checked
    return None, checked


def brute_force_is_lattice(constellation: Constellation) -> LatticeVerdict:
    """Decide latticeness by testing closure of the cosets under addition mod 2^L.

    Pairs of distinct cosets are scanned in lexicographic order before doublings;
    the first escaping pair is the witness.

    Raises:
        ImplicitModeError: if the constellation is implicit.
    """
    if not constellation.is_explicit:
        raise ImplicitModeError(
            "brute force needs an explicit constellation, this one has "
            f"{constellation.points_per_period} cosets"
        )
    points = constellation.coset_array()
    modulus = constellation.modulus
    members = constellation.cosets
    assert members is not None
    pairs = [
        (i, points[i + 1 :]) for i in range(len(points))
    ] + [(i, points[i : i + 1]) for i in range(len(points))]
    for i, others in pairs:
        sums = (points[i] + others) % modulus
        for row, total in enumerate(sums.tolist()):
            if tuple(total) not in members:
                witness = PointWitness(_ints(points[i]), _ints(others[row]))
                return LatticeVerdict(
                    False,
                    BRUTEFORCE,
                    witness=witness,
                    reason=f"{witness.left} + {witness.right} = {witness.total} "
                    "is not in the constellation",
                )
    return LatticeVerdict(
        True, BRUTEFORCE, reason="cosets are closed under addition mod 2^L"
    )


def theorem1_check(codes: Sequence[LinearCode]) -> LatticeVerdict:
    """Construction C over nested codes is a lattice iff C_i ∗ C_i ⊆ C_{i+1}.

    Non-nested families give an undecided verdict with ``precondition_held``
    False.
    """
    codes = list(codes)
    if not codes:
        raise ValueError("construction C needs at least one level")
    if any(code.length != codes[0].length for code in codes):
        raise DimensionMismatchError("level codes must share a length")
    for level, (smaller, larger) in enumerate(zip(codes, codes[1:]), start=1):
        if not smaller.is_subcode_of(larger):
            return LatticeVerdict(
                None,
                THEOREM1,
                precondition_held=False,
                reason=f"C{level} is not contained in C{level + 1}",
            )
    for level, (source, target) in enumerate(zip(codes, codes[1:]), start=2):
        witness, _ = schur_closure_witness(source, target, level)
        if witness is not None:
            return LatticeVerdict(
                False,
                THEOREM1,
                precondition_held=True,
                witness=witness,
                reason=f"{witness.left} ∗ {witness.right} = {witness.product} "
                f"is not in C{level}",
            )
    return LatticeVerdict(
        True,
        THEOREM1,
        precondition_held=True,
        reason="nested codes are closed under Schur product",
    )


def _levels(layered: LayeredCode):
    return range(1, layered.levels + 1)


def theorem2_check(layered: LayeredCode) -> LatticeVerdict:
    """Construction C⋆ latticeness through the antiprojections S_i(0, …, 0).

    Given the chain C₁ ⊆ S₂(0) ⊆ C₂ ⊆ … ⊆ S_L(0) ⊆ C_L, the
    constellation is a lattice iff S_i(0) contains the Schur products of
    C_{i-1} for i = 2..L.  If the chain breaks the verdict is undecided.
    """
    projections = {i: projection_code(layered, i) for i in _levels(layered)}
    zero_context = {i: antiprojection_zero(layered, i) for i in _levels(layered)}
    for level in range(2, layered.levels + 1):
        if not projections[level - 1].is_subcode_of(zero_context[level]):
            return LatticeVerdict(
                None,
                THEOREM2,
                precondition_held=False,
                reason=f"C{level - 1} is not contained in S{level}(0,…,0)",
            )
    for level in range(2, layered.levels + 1):
        witness, _ = schur_closure_witness(
            projections[level - 1], zero_context[level], level
        )
        if witness is not None:
            return LatticeVerdict(
                False,
                THEOREM2,
                precondition_held=True,
                witness=witness,
                reason=f"{witness.left} ∗ {witness.right} = {witness.product} "
                f"is not in S{level}(0,…,0)",
            )
    return LatticeVerdict(
        True,
        THEOREM2,
        precondition_held=True,
        reason="every S_i(0,…,0) closes C_{i-1} under Schur product",
    )


def corollary_check(layered: LayeredCode) -> LatticeVerdict:
    """The associated Construction C is a lattice when Construction C⋆ passes.

    Raises:
        InapplicableError: unless theorem2_check holds with its chain satisfied.
    """
    verdict = theorem2_check(layered)
    if not verdict.precondition_held or not verdict.is_lattice:
        raise InapplicableError(
            f"the structural check did not certify a lattice: {verdict.reason}"
        )
    projections = [projection_code(layered, i) for i in _levels(layered)]
    result = theorem1_check(projections)
    assert result.is_lattice, "chain and closure imply nested Schur closure"
    return result


def decide(
    layered: LayeredCode, method: str = "auto", settings: Settings = DEFAULT_SETTINGS
) -> LatticeVerdict:
    """Decide whether Construction C⋆ of a layered code is a lattice.

    Args:
        layered: the code.
        method: ``theorem2`` or ``bruteforce`` to force a route; ``auto`` runs the
            structural check and falls back to brute force when its chain fails
            and the cosets can be enumerated.
        settings: enumeration limits.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    structural = None
    if method in ("auto", THEOREM2):
        structural = theorem2_check(layered)
        if method == THEOREM2 or structural.precondition_held:
            return structural
    constellation = construction_c_star(layered, settings)
    count = constellation.points_per_period
    if not constellation.is_explicit or count * (count + 1) // 2 > settings.enum_cap:
        reason = f"{count} cosets are too many to add in pairs"
        if structural is not None:
            reason = f"{structural.reason}; {reason}"
        return LatticeVerdict(
            None,
            BRUTEFORCE,
            precondition_held=None if structural is None else False,
            reason=reason,
        )
    verdict = brute_force_is_lattice(constellation)
    if structural is None:
        return verdict
    return attr.evolve(
        verdict,
        precondition_held=False,
        reason=f"{structural.reason}; {verdict.reason}",
    )


def witness_escapes(constellation: Constellation, witness: PointWitness) -> bool:
    """Whether a brute-force witness really escapes (both in, sum out)."""
    return (
        contains_point(constellation, witness.left)
        and contains_point(constellation, witness.right)
        and not contains_point(constellation, witness.total)
    )
