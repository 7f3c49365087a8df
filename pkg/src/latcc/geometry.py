"""Euclidean minimum distance and packing density of periodic constellations."""
import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import attr
import numpy as np
from attr import attrs

from .codes import golay24
from .config import DEFAULT_SETTINGS, Settings
from .constructions import Constellation, lattice_closure
from .errors import EnumerationCapError, ImplicitModeError
from .gf2 import BitWord, LinearCode, minimum_distance, minimum_weight_word
from .latticeness import Decomposition, theorem1_check

__all__ = [
    "DensityReport",
    "ball_volume",
    "leech_branch_min",
    "leech_min_norm",
    "level_min_norm",
    "min_distance_sq",
    "min_representative",
    "norm",
    "packing_density",
]

Point = Tuple[int, ...]
PointPair = Tuple[Point, Point]

LEECH_TRANSLATE_NORM = 64


def min_representative(point: Sequence[int], levels: int) -> Point:
    """Shortest vector of ``point + 2^L Zⁿ``.

    A residue of ±2^{L-1} becomes +2^{L-1}.
    """
    modulus = 2 ** levels
    residues = [int(x) % modulus for x in point]
    return tuple(r - modulus if 2 * r > modulus else r for r in residues)


def norm(point: Sequence[int]) -> int:
    """Squared Euclidean norm."""
    return sum(int(x) * int(x) for x in point)


def _reduced_norms(differences: np.ndarray, modulus: int) -> np.ndarray:
    residues = differences % modulus
    shortest = np.where(2 * residues > modulus, residues - modulus, residues)
    return (shortest * shortest).sum(axis=1)


def _translate_witness(dimension: int, levels: int) -> PointPair:
    zero = (0,) * dimension
    return zero, (2 ** levels,) + zero[1:]


def level_min_norm(
    codes: Sequence[LinearCode], settings: Settings = DEFAULT_SETTINGS
) -> int:
    """min(4^{i-1} d_H(C_i), 4^L): the minimum norm of a Construction C lattice."""
    levels = len(codes)
    best = 4 ** levels
    for level, code in enumerate(codes):
        distance = minimum_distance(code, settings)
        if distance is not None:
            best = min(best, 4 ** level * distance)
    return best


def _level_witness(
    codes: Sequence[LinearCode], target: int, settings: Settings
) -> PointPair:
    dimension = codes[0].length
    for level, code in enumerate(codes):
        distance = minimum_distance(code, settings)
        if distance is not None and 4 ** level * distance == target:
            word = minimum_weight_word(code, settings)
            assert word is not None
            return (0,) * dimension, tuple(2 ** level * bit for bit in word)
    return _translate_witness(dimension, len(codes))


def _is_subgroup(constellation: Constellation, settings: Settings) -> bool:
    """Whether the cosets are closed under addition mod 2^L."""
    count = constellation.points_per_period
    try:
        closure = lattice_closure(constellation, attr.evolve(settings, enum_cap=count))
    except EnumerationCapError:
        return False
    return closure.points_per_period == count


def min_distance_sq(
    constellation: Constellation, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[int, PointPair]:
    """Squared minimum distance of a constellation and a pair achieving it.

    Differences are reduced to their shortest representatives, and the pure
    translate distance 4^L is always a candidate.  When the cosets form a group
    only the differences from the origin are scanned; otherwise every pair of
    distinct cosets is.  The witness is the first minimizing pair in
    lexicographic order.  An implicit Construction C is accepted when it is a
    lattice, whose minimum is read off its level codes.

    Raises:
        ImplicitModeError: for implicit constellations that are not covered.
        EnumerationCapError: when there are more cosets than the cap.
    """
    n, levels = constellation.dimension, constellation.levels
    best = 4 ** levels
    witness = _translate_witness(n, levels)
    if constellation.cosets is None:
        if constellation.factors is not None:
            verdict = theorem1_check(constellation.factors)
            if verdict.is_lattice:
                best = level_min_norm(constellation.factors, settings)
                return best, _level_witness(constellation.factors, best, settings)
        raise ImplicitModeError(
            f"{constellation.source} with {constellation.points_per_period} cosets "
            "is too large to scan; use leech_min_norm for the Leech code"
        )
    points = constellation.coset_array()
    count = len(points)
    if count > settings.enum_cap:
        raise EnumerationCapError(
            f"{count} cosets are over the enumeration cap of {settings.enum_cap}"
        )
    # The origin sorts first, and in a group every difference is a coset
    sources = 1 if _is_subgroup(constellation, settings) else count - 1
    for i in range(sources):
        norms = _reduced_norms(points[i + 1 :] - points[i], constellation.modulus)
        if not len(norms):
            break
        j = int(np.argmin(norms))
        if norms[j] < best:
            best = int(norms[j])
            witness = (
                tuple(int(x) for x in points[i]),
                tuple(int(x) for x in points[i + 1 + j]),
            )
    return best, witness


def ball_volume(dimension: int) -> float:
    """Volume V_n = π^{n/2} / Γ(n/2 + 1) of the unit ball."""
    return math.pi ** (dimension / 2) / math.gamma(dimension / 2 + 1)


@attrs(frozen=True, auto_attribs=True)
class DensityReport:
    """Packing density of a periodic constellation.

    Attributes:
        min_distance_sq: d².
        points_per_period: M, the number of cosets of 2^L Zⁿ.
        dimension: n.
        levels: L.
        center_density: (d/2)ⁿ M / 2^{nL}.
        center_density_exact: the same as a Fraction when n is even, else None.
        packing_density: V_n times the center density.
    """

    min_distance_sq: int
    points_per_period: int
    dimension: int
    levels: int
    center_density: float
    center_density_exact: Optional[Fraction]
    packing_density: float


def _density_report(
    d2: int, points_per_period: int, dimension: int, levels: int
) -> DensityReport:
    scale = Fraction(points_per_period, 2 ** (dimension * levels))
    radius_sq = Fraction(d2, 4)
    if dimension % 2 == 0:
        exact: Optional[Fraction] = radius_sq ** (dimension // 2) * scale
        center = float(exact)
    else:
        exact = None
        center = float(radius_sq ** (dimension // 2) * scale) * math.sqrt(radius_sq)
    return DensityReport(
        min_distance_sq=d2,
        points_per_period=points_per_period,
        dimension=dimension,
        levels=levels,
        center_density=center,
        center_density_exact=exact,
        packing_density=ball_volume(dimension) * center,
    )


def packing_density(
    constellation: Constellation,
    d2: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> DensityReport:
    """Packing density Δ = V_n (d/2)ⁿ M / 2^{nL}.

    Args:
        constellation: the constellation.
        d2: its squared minimum distance, computed with min_distance_sq when not
            supplied (implicit constellations such as the Leech code need it).
        settings: enumeration limits.
    """
    if d2 is None:
        d2, _ = min_distance_sq(constellation, settings)
    return _density_report(
        d2,
        constellation.points_per_period,
        constellation.dimension,
        constellation.levels,
    )


def _mod8_cost(values: np.ndarray) -> np.ndarray:
    residues = values % 8
    shortest = np.minimum(residues, 8 - residues)
    return shortest * shortest


def _branch_costs(c1_bit: int, c2_words: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    base = c1_bit + 2 * c2_words.astype(np.int64)
    return _mod8_cost(base), _mod8_cost(base + 4)


def _best_level3(
    c1_bit: int, cost0: np.ndarray, cost1: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Cheapest c₃ per row whose parity equals ``c1_bit``, and its cost."""
    bits = (cost1 < cost0).astype(np.uint8)
    totals = np.minimum(cost0, cost1).sum(axis=1)
    penalty = np.abs(cost1 - cost0)
    repair = np.argmin(penalty, axis=1)
    wrong = (bits.sum(axis=1) % 2) != c1_bit
    rows = np.nonzero(wrong)[0]
    bits[rows, repair[rows]] ^= 1
    totals[rows] += penalty[rows, repair[rows]]
    return bits, totals


def leech_branch_min(c1_bit: int, c2: BitWord) -> Tuple[int, BitWord]:
    """Smallest norm over c₃ of c₁ + 2c₂ + 4c₃ + 8z for fixed c₁ and c₂.

    c₃ ranges over the words with parity equal to ``c1_bit`` (nonzero when c₁ and
    c₂ are both zero).

    Returns:
        (norm, minimizing c₃).
    """
    cost0, cost1 = _branch_costs(c1_bit, c2.to_array()[None, :])
    if c1_bit == 0 and c2.is_zero:
        return _zero_branch(cost1[0])
    bits, totals = _best_level3(c1_bit, cost0, cost1)
    return int(totals[0]), BitWord.from_array(bits[0])


def _zero_branch(cost1: np.ndarray) -> Tuple[int, BitWord]:
    # Cheapest nonzero even c₃: the two cheapest coordinates.
    first, second = np.argsort(cost1, kind="stable")[:2]
    bits = np.zeros(len(cost1), dtype=np.uint8)
    bits[[first, second]] = 1
    return int(cost1[first] + cost1[second]), BitWord.from_array(bits)


def _decomposition(c1_bit: int, c2: np.ndarray, c3: np.ndarray) -> Decomposition:
    c1 = np.full(len(c2), c1_bit, dtype=np.int64)
    values = c1 + 2 * c2.astype(np.int64) + 4 * c3.astype(np.int64)
    translate = np.where(values > 4, -1, 0)
    return Decomposition([c1, c2, c3], translate)


def leech_min_norm(golay: Optional[LinearCode] = None) -> Tuple[int, Decomposition]:
    """Exact minimum nonzero norm of the Leech Construction C⋆.

    Every point is c₁ + 2c₂ + 4c₃ + 8z with c₁ ∈ {0, 1²⁴}, c₂ in the
    Golay code and the parity of c₃ equal to the bit of c₁.  For each of
    the 2 · 4096 choices of (c₁, c₂) the best c₃ and z are chosen
    coordinatewise, then the parity of c₃ is repaired at the cheapest
    coordinate.

    Returns:
        (32, a decomposition of a point of norm 32).
    """
    if golay is None:
        golay = golay24()
    words = golay.codeword_array()
    zero_row = int(np.nonzero(~words.any(axis=1))[0][0])
    best: Optional[Tuple[int, Decomposition]] = None
    for c1_bit in (0, 1):
        cost0, cost1 = _branch_costs(c1_bit, words)
        bits, totals = _best_level3(c1_bit, cost0, cost1)
        if c1_bit == 0:
            cost, c3 = _zero_branch(cost1[zero_row])
            totals[zero_row] = cost
            bits[zero_row] = c3.to_array()
        row = int(np.argmin(totals))
        if best is None or totals[row] < best[0]:
            best = (int(totals[row]), _decomposition(c1_bit, words[row], bits[row]))
    assert best is not None
    if best[0] >= LEECH_TRANSLATE_NORM:
        zero = np.zeros(golay.length, dtype=np.uint8)
        translate = np.zeros(golay.length, dtype=np.int64)
        translate[0] = 1
        return LEECH_TRANSLATE_NORM, Decomposition([zero] * 3, translate)
    return best
