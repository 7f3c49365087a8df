"""Tests for constructions module."""

from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latcc.catalog import builtin_code
from latcc.codes import even_parity, golay24, repetition
from latcc.config import Settings
from latcc.constructions import (
    Constellation,
    NestedFamily,
    associated_construction_c,
    constellation_from_points,
    construction_a,
    construction_c,
    construction_c_star,
    construction_d,
    contains_point,
    lattice_closure,
    points_in_box,
)
from latcc.errors import (
    DimensionMismatchError,
    EnumerationCapError,
    ImplicitModeError,
    NotNestedError,
)
from latcc.gf2 import BitWord, LayeredCode, LinearCode, is_product_code
from latcc.latticeness import brute_force_is_lattice, theorem1_check

from .conftest import bits

TINY = Settings(enum_cap=1)


def code_of(*words):
    """Linear code spanned by bitstrings."""
    return LinearCode(len(words[0]), list(words))


def test_construction_a():
    """Test C + 2Zⁿ for the even-weight code."""
    constellation = construction_a(even_parity(2))
    assert constellation.levels == 1
    assert constellation.cosets == {(0, 0), (1, 1)}
    assert constellation.source == "construction A"


def test_construction_c():
    """Test the level sums C₁ + 2C₂ + 4Zⁿ."""
    constellation = construction_c([code_of("10"), LinearCode.full(2)])
    assert constellation.points_per_period == 8
    assert constellation.modulus == 4
    assert (1, 2) in constellation.cosets
    assert (0, 1) not in constellation.cosets


def test_construction_c_needs_matching_lengths():
    """Test that level codes must share a length."""
    with pytest.raises(DimensionMismatchError):
        construction_c([repetition(2), repetition(3)])
    with pytest.raises(ValueError):
        construction_c([])


def test_construction_c_star_examples():
    """Test the coset lists of the two-level examples."""
    assert construction_c_star(builtin_code("ex1")).sorted_cosets() == [
        (0, 0),
        (1, 2),
        (2, 2),
        (3, 0),
    ]
    assert construction_c_star(builtin_code("ex2")).sorted_cosets() == [
        (0, 0),
        (1, 2),
        (2, 0),
        (3, 2),
    ]


def test_construction_c_star_implicit(leech):
    """Test that large constellations keep their code instead of a coset list."""
    constellation = construction_c_star(leech)
    assert not constellation.is_explicit
    assert constellation.points_per_period == 2 ** 36
    with pytest.raises(ImplicitModeError):
        constellation.sorted_cosets()


def test_associated_construction_c(leech):
    """Test Construction C over the projection codes."""
    associated = associated_construction_c(builtin_code("ex2"))
    assert associated.points_per_period == 8
    assert associated.source == "associated construction C"
    large = associated_construction_c(leech)
    assert large.factors is not None
    assert [code.rank for code in large.factors] == [1, 12, 24]
    assert large.points_per_period == 2 ** 37


def test_contains_point():
    """Test membership, reducing mod 2^L."""
    constellation = construction_c_star(builtin_code("ex2"))
    assert contains_point(constellation, (5, -2))
    assert not contains_point(constellation, (1, 0))
    with pytest.raises(DimensionMismatchError):
        contains_point(constellation, (1, 2, 3))


def test_contains_point_implicit(leech):
    """Test membership of the Leech constellation without enumerating it."""
    constellation = construction_c_star(leech)
    assert contains_point(constellation, [0] * 24)
    assert contains_point(constellation, [8] + [0] * 23)
    assert contains_point(constellation, [4, 4] + [0] * 22)
    assert not contains_point(constellation, [4] + [0] * 23)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 2), st.integers(1, 3), st.data())
def test_implicit_and_explicit_membership_agree(n, levels, data):
    """Test that both representations contain the same points."""
    length = n * levels
    rows = data.draw(st.lists(bits(length), max_size=4))
    layered = LayeredCode.from_generators(rows, n, levels)
    explicit = construction_c_star(layered)
    implicit = construction_c_star(layered, TINY)
    assert explicit.points_per_period == layered.code.size
    assert len(explicit.cosets) == layered.code.size
    for point in product(range(-2, 3), repeat=n):
        assert contains_point(explicit, point) == contains_point(implicit, point)


def test_constellation_validation():
    """Test that coset representatives must be canonical."""
    with pytest.raises(ValueError):
        Constellation(2, 1, "points", cosets=[(0, 2)])
    with pytest.raises(ValueError):
        Constellation(2, 1, "points")


def test_constellation_from_points():
    """Test reducing arbitrary points to cosets."""
    constellation = constellation_from_points([(5, -3), (1, 1), (0, 4)], 2)
    assert constellation.cosets == {(1, 1), (0, 0)}
    with pytest.raises(ValueError):
        constellation_from_points([], 2)
    assert constellation_from_points([], 2, dimension=3).points_per_period == 0


def test_nested_family():
    """Test the nesting check and the chain basis."""
    family = NestedFamily([code_of("11"), LinearCode.full(2)])
    basis, dimensions = family.chain_basis()
    assert dimensions == [1, 2]
    assert [BitWord.from_array(b) for b in basis] == [BitWord("11"), BitWord("10")]
    with pytest.raises(NotNestedError):
        NestedFamily([code_of("10"), code_of("11")])
    with pytest.raises(DimensionMismatchError):
        NestedFamily([repetition(2), repetition(3)])


def test_construction_d():
    """Test Construction D for a two-level family."""
    family = NestedFamily([code_of("11"), LinearCode.full(2)])
    constellation = construction_d(family)
    assert constellation.points_per_period == 8
    assert constellation.cosets == construction_c(family.codes).cosets


def test_construction_d_cap():
    """Test that Construction D refuses to enumerate past the cap."""
    family = NestedFamily([repetition(24), golay24()])
    with pytest.raises(EnumerationCapError):
        construction_d(family, Settings(enum_cap=1000))


def _random_nested_family(rng, n, levels):
    """Nested codes spanned by growing prefixes of random rows."""
    total = int(rng.integers(0, n + 1))
    rows = rng.integers(0, 2, size=(total, n))
    ranks = np.sort(rng.integers(0, total + 1, size=levels))
    return NestedFamily(
        [LinearCode.from_matrix(rows[:k].reshape(-1, n)) for k in ranks]
    )


@pytest.mark.slow
def test_construction_d_equals_c_when_schur_closed(rng):
    """Test that D = C for nested families closed under Schur products."""
    closed = 0
    for _ in range(300):
        family = _random_nested_family(
            rng, int(rng.integers(1, 7)), int(rng.integers(1, 4))
        )
        if theorem1_check(family.codes).is_lattice:
            closed += 1
            assert construction_d(family).cosets == construction_c(family.codes).cosets
    assert closed >= 20


@pytest.mark.slow
def test_theorem1_matches_brute_force(rng):
    """Test the Schur criterion for nested Construction C against closure."""
    for _ in range(200):
        family = _random_nested_family(
            rng, int(rng.integers(1, 5)), int(rng.integers(1, 4))
        )
        constellation = construction_c(family.codes)
        if constellation.points_per_period > 64:
            continue
        assert (
            theorem1_check(family.codes).is_lattice
            == brute_force_is_lattice(constellation).is_lattice
        )
        assert brute_force_is_lattice(construction_d(family)).is_lattice


def test_lattice_closure():
    """Test the smallest lattice containing Construction C⋆ of ex1."""
    constellation = construction_c_star(builtin_code("ex1"))
    closure = lattice_closure(constellation)
    assert len(closure.cosets) == 8
    assert constellation.cosets <= closure.cosets
    assert brute_force_is_lattice(closure).is_lattice


def test_lattice_closure_of_a_lattice_is_itself():
    """Test that closing a lattice changes nothing."""
    constellation = construction_c_star(builtin_code("ex2"))
    assert lattice_closure(constellation).cosets == constellation.cosets


def test_points_in_box():
    """Test listing points with every coordinate in [-R, R]."""
    constellation = construction_a(even_parity(2))
    expected = [(-1, -1), (-1, 1), (0, 0), (1, -1), (1, 1)]
    assert points_in_box(constellation, 1) == expected
    implicit = construction_a(even_parity(2), TINY)
    assert not implicit.is_explicit
    assert points_in_box(implicit, 1) == expected
    assert points_in_box(constellation, 0) == [(0, 0)]
    with pytest.raises(ValueError):
        points_in_box(constellation, -1)


def test_points_in_box_cap_counts_points():
    """Test that the cap applies to the points in the box, before listing them."""
    constellation = construction_c_star(builtin_code("ex2"))
    with pytest.raises(EnumerationCapError):
        points_in_box(constellation, 10 ** 6, Settings(enum_cap=10))
    assert len(points_in_box(constellation, 4, Settings(enum_cap=23))) == 23
    with pytest.raises(EnumerationCapError):
        points_in_box(constellation, 4, Settings(enum_cap=22))


# One level


@pytest.mark.parametrize(
    "code", [LinearCode.zero(3), repetition(3), even_parity(3), LinearCode.full(3)]
)
def test_single_level_constructions_agree(code):
    """Test that A, C, D and C⋆ coincide with one level."""
    expected = construction_a(code).cosets
    assert construction_c([code]).cosets == expected
    assert construction_d(NestedFamily([code])).cosets == expected
    assert construction_c_star(LayeredCode(code, 3, 1)).cosets == expected


# C⋆ against its associated Construction C


def _all_codes(length):
    """Every linear code of the given length."""
    words = ["".join(w) for w in product("01", repeat=length)][1:]
    codes = {LinearCode.zero(length)}
    for rank in range(1, length + 1):
        for generators in combinations(words, rank):
            codes.add(LinearCode(length, list(generators)))
    return codes


def _check_inside_associated(layered):
    star = construction_c_star(layered).cosets
    associated = associated_construction_c(layered).cosets
    assert star <= associated
    assert (star == associated) == is_product_code(layered)


@pytest.mark.parametrize("n,levels", [(1, 2), (1, 3), (1, 4), (2, 2), (3, 1), (4, 1)])
def test_construction_c_star_inside_associated_exhaustively(n, levels):
    """Test every layered code of length at most 4."""
    for code in _all_codes(n * levels):
        _check_inside_associated(LayeredCode(code, n, levels))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_construction_c_star_inside_associated(n, data):
    """Test random codes with n·L at most 8."""
    levels = data.draw(st.integers(1, 8 // n))
    rows = data.draw(st.lists(bits(n * levels), max_size=5))
    _check_inside_associated(LayeredCode.from_generators(rows, n, levels))


def test_equal_levels_not_schur_closed():
    """Test C₁ = C₂ = span{110, 011}, which is not closed under Schur products."""
    level = code_of("110", "011")
    verdict = theorem1_check([level, level])
    assert verdict.is_lattice is False
    assert verdict.witness.product not in level
    assert brute_force_is_lattice(construction_c([level, level])).is_lattice is False
