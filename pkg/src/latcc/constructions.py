"""Constellations from binary codes: Constructions A, C, D and C⋆.

Every constellation here is periodic with period 2^L, so it is stored as its set
of coset representatives in [0, 2^L)^n.  When that set would be too large, the
constellation stays implicit and keeps the codes it was built from.
"""
from itertools import product
from math import prod
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import attr
import numpy as np
from attr import attrs

from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    DimensionMismatchError,
    EnumerationCapError,
    ImplicitModeError,
    NotNestedError,
)
from .gf2 import BitWord, LayeredCode, LinearCode, projection_code

__all__ = [
    "Constellation",
    "NestedFamily",
    "associated_construction_c",
    "constellation_from_points",
    "construction_a",
    "construction_c",
    "construction_c_star",
    "construction_d",
    "contains_point",
    "lattice_closure",
    "points_in_box",
]

Point = Tuple[int, ...]


def _frozen_points(points) -> FrozenSet[Point]:
    if isinstance(points, np.ndarray):
        return frozenset(map(tuple, points.tolist()))
    return frozenset(tuple(int(x) for x in p) for p in points)


@attrs(frozen=True, auto_attribs=True)
class Constellation:
    """A subset of Zⁿ invariant under translation by 2^L Zⁿ.

    Exactly one of ``cosets`` (explicit mode) or ``layered``/``factors``
    (implicit mode) is set.

    Attributes:
        dimension: n.
        levels: L; the period is 2^L.
        source: which construction produced the constellation.
        cosets: coset representatives with coordinates in [0, 2^L).
        layered: the code of an implicit Construction C⋆.
        factors: the level codes of an implicit Construction C.
    """

    dimension: int
    levels: int
    source: str
    cosets: Optional[FrozenSet[Point]] = attr.ib(
        default=None,
        converter=attr.converters.optional(_frozen_points),  # type: ignore
    )
    layered: Optional[LayeredCode] = None
    factors: Optional[Tuple[LinearCode, ...]] = None

    def __attrs_post_init__(self):
        modes = [x is not None for x in (self.cosets, self.layered, self.factors)]
        if sum(modes) != 1:
            raise ValueError("a constellation needs exactly one representation")
        if self.cosets is not None:
            for point in self.cosets:
                if len(point) != self.dimension or not all(
                    0 <= x < self.modulus for x in point
                ):
                    raise ValueError(f"coset {point} is not canonical")

    @property
    def modulus(self) -> int:
        """The period 2^L."""
        return 2 ** self.levels

    @property
    def is_explicit(self) -> bool:
        """Whether the coset list is materialized."""
        return self.cosets is not None

    @property
    def points_per_period(self) -> int:
        """Number M of points in the cube [0, 2^L)ⁿ."""
        if self.cosets is not None:
            return len(self.cosets)
        if self.layered is not None:
            # The natural labelling is one-to-one on (c₁, …, c_L)
            return self.layered.code.size
        assert self.factors is not None
        return prod(code.size for code in self.factors)

    def sorted_cosets(self) -> List[Point]:
        """Coset representatives in lexicographic order."""
        if self.cosets is None:
            raise ImplicitModeError(
                f"{self.source} constellation with {self.points_per_period} cosets "
                "is implicit"
            )
        return sorted(self.cosets)

    def coset_array(self) -> np.ndarray:
        """Sorted coset representatives as rows of an int64 array."""
        return np.array(self.sorted_cosets(), dtype=np.int64).reshape(
            -1, self.dimension
        )


@attrs(frozen=True)
class NestedFamily:
    """Nested linear codes C₁ ⊆ … ⊆ C_L of a common length."""

    codes: Tuple[LinearCode, ...] = attr.ib(converter=tuple)

    @codes.validator
    def _check_nested(self, attribute, value):
        # pylint: disable=unused-argument
        if not value:
            raise ValueError("a nested family needs at least one code")
        length = value[0].length
        if any(code.length != length for code in value):
            raise DimensionMismatchError("codes in a family must share a length")
        for level, (smaller, larger) in enumerate(zip(value, value[1:]), start=1):
            if not smaller.is_subcode_of(larger):
                raise NotNestedError(f"C{level} is not contained in C{level + 1}")

    @property
    def length(self) -> int:
        """Common block length n."""
        return self.codes[0].length

    def chain_basis(self) -> Tuple[List[np.ndarray], List[int]]:
        """A basis b₁, …, b_{k_L} of C_L whose first k_i vectors span C_i.

        Returns:
            (basis vectors, [k₁, …, k_L]).
        """
        basis: List[np.ndarray] = []
        dimensions = []
        span = LinearCode.zero(self.length)
        for code in self.codes:
            for row in code.basis:
                if not span.contains_array(row)[0]:
                    basis.append(row.astype(np.int64))
                    span = LinearCode(
                        self.length, span.reduced_generators + [BitWord.from_array(row)]
                    )
            dimensions.append(len(basis))
        return basis, dimensions


def _check_cap(count: int, what: str, settings: Settings):
    if count > settings.enum_cap:
        raise EnumerationCapError(
            f"{what} has {count} points per period, over the enumeration cap of "
            f"{settings.enum_cap}"
        )


def _level_sums(levels: Sequence[np.ndarray], dimension: int) -> np.ndarray:
    """All sums Σ 2^{i-1} v_i with v_i ranging over the rows of ``levels[i-1]``."""
    points = np.zeros((1, dimension), dtype=np.int64)
    for level, words in enumerate(levels):
        scaled = (2 ** level) * words.astype(np.int64)
        points = (points[:, None, :] + scaled[None, :, :]).reshape(-1, dimension)
    return points


def construction_c(
    codes: Sequence[LinearCode],
    settings: Settings = DEFAULT_SETTINGS,
    source: str = "construction C",
) -> Constellation:
    """Construction C: C₁ + 2C₂ + … + 2^{L-1}C_L + 2^L Zⁿ.

    The constellation is explicit when the product of the code sizes is within the
    enumeration cap, otherwise implicit.
    """
    codes = tuple(codes)
    if not codes:
        raise ValueError("construction C needs at least one level")
    dimension = codes[0].length
    if any(code.length != dimension for code in codes):
        raise DimensionMismatchError("level codes must share a length")
    count = prod(code.size for code in codes)
    if count > settings.enum_cap:
        return Constellation(dimension, len(codes), source, factors=codes)
    points = _level_sums([code.codeword_array() for code in codes], dimension)
    return Constellation(dimension, len(codes), source, cosets=points)


def construction_a(
    code: LinearCode, settings: Settings = DEFAULT_SETTINGS
) -> Constellation:
    """Construction A: C + 2Zⁿ."""
    return construction_c([code], settings, source="construction A")


def construction_d(
    family: NestedFamily, settings: Settings = DEFAULT_SETTINGS
) -> Constellation:
    """Construction D: Σ 2^{i-1} Σ_{j ≤ k_i} α_ij b_j + 2^L Zⁿ.

    The sums over α are integer sums, reduced mod 2^L only at the end.
    """
    basis, dimensions = family.chain_basis()
    _check_cap(2 ** sum(dimensions), "construction D", settings)
    levels = []
    for dimension in dimensions:
        vectors = np.array(basis[:dimension], dtype=np.int64).reshape(
            -1, family.length
        )
        choices = np.array(list(product((0, 1), repeat=dimension)), dtype=np.int64)
        levels.append(choices.reshape(2 ** dimension, dimension) @ vectors)
    modulus = 2 ** len(family.codes)
    points = _level_sums(levels, family.length) % modulus
    return Constellation(
        family.length, len(family.codes), "construction D", cosets=points
    )


def construction_c_star(
    layered: LayeredCode, settings: Settings = DEFAULT_SETTINGS
) -> Constellation:
    """Construction C⋆: {Σ 2^{i-1} c_i : (c₁, …, c_L) ∈ C} + 2^L Zⁿ."""
    n, levels = layered.block_length, layered.levels
    if layered.code.size > settings.enum_cap:
        return Constellation(n, levels, "construction C*", layered=layered)
    weights = 2 ** np.arange(levels, dtype=np.int64)
    blocks = layered.code.codeword_array().astype(np.int64).reshape(-1, levels, n)
    points = np.einsum("l,wln->wn", weights, blocks)
    return Constellation(n, levels, "construction C*", cosets=points)


def associated_construction_c(
    layered: LayeredCode, settings: Settings = DEFAULT_SETTINGS
) -> Constellation:
    """Construction C over the projection codes of a layered code."""
    projections = [
        projection_code(layered, level) for level in range(1, layered.levels + 1)
    ]
    return construction_c(projections, settings, source="associated construction C")


def _level_bits(residue: Sequence[int], levels: int) -> List[BitWord]:
    return [
        BitWord([(x >> level) & 1 for x in residue]) for level in range(levels)
    ]


def contains_point(constellation: Constellation, point: Iterable[int]) -> bool:
    """Whether an integer point belongs to the constellation."""
    point = tuple(int(x) for x in point)
    if len(point) != constellation.dimension:
        raise DimensionMismatchError(
            f"point has dimension {len(point)}, constellation has "
            f"{constellation.dimension}"
        )
    residue = tuple(x % constellation.modulus for x in point)
    if constellation.cosets is not None:
        return residue in constellation.cosets
    blocks = _level_bits(residue, constellation.levels)
    if constellation.layered is not None:
        return constellation.layered.contains_blocks(blocks)
    assert constellation.factors is not None
    return all(block in code for block, code in zip(blocks, constellation.factors))


def constellation_from_points(
    points: Iterable[Iterable[int]], levels: int, dimension: Optional[int] = None
) -> Constellation:
    """Explicit constellation from points, reduced mod 2^L."""
    modulus = 2 ** levels
    cosets = {tuple(int(x) % modulus for x in p) for p in points}
    if dimension is None:
        if not cosets:
            raise ValueError("cannot infer the dimension of an empty point set")
        dimension = len(next(iter(cosets)))
    return Constellation(dimension, levels, "points", cosets=cosets)


def lattice_closure(
    constellation: Constellation, settings: Settings = DEFAULT_SETTINGS
) -> Constellation:
    """The smallest lattice containing an explicit constellation.

    Computed as the subgroup of (Z/2^L Z)ⁿ generated by the coset representatives.
    """
    modulus = constellation.modulus
    group = {tuple([0] * constellation.dimension)}
    for generator in constellation.sorted_cosets():
        if generator in group:
            continue
        multiples = []
        current = generator
        while any(current):
            multiples.append(current)
            current = tuple((a + b) % modulus for a, b in zip(current, generator))
        group |= {
            tuple((a + b) % modulus for a, b in zip(element, multiple))
            for element in group
            for multiple in multiples
        }
        _check_cap(len(group), "lattice closure", settings)
    return Constellation(
        constellation.dimension, constellation.levels, "lattice closure", cosets=group
    )


def points_in_box(
    constellation: Constellation, radius: int, settings: Settings = DEFAULT_SETTINGS
) -> List[Point]:
    """All constellation points with every coordinate in [-R, R], sorted."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    modulus = constellation.modulus
    if constellation.cosets is None:
        _check_cap((2 * radius + 1) ** constellation.dimension, "box", settings)
        box = product(range(-radius, radius + 1), repeat=constellation.dimension)
        return [p for p in box if contains_point(constellation, p)]
    ranges = [
        [
            range(x - modulus * ((x + radius) // modulus), radius + 1, modulus)
            for x in coset
        ]
        for coset in constellation.cosets
    ]
    count = sum(prod(map(len, coordinates)) for coordinates in ranges)
    _check_cap(count, "box", settings)
    return sorted(point for coordinates in ranges for point in product(*coordinates))
