"""Tests for gf2 module."""
# pylint: disable=redefined-outer-name

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latcc.codes import even_parity, golay24, repetition
from latcc.config import Settings
from latcc.errors import (
    DimensionMismatchError,
    EnumerationCapError,
    LevelIndexError,
    NotLinearError,
)
from latcc.gf2 import (
    BitWord,
    LayeredCode,
    LinearCode,
    antiprojection,
    antiprojection_zero,
    dual,
    is_product_code,
    minimum_distance,
    minimum_weight_word,
    parity_check_matrix,
    projection_code,
    rref,
    schur,
    split_blocks,
    weight_distribution,
)

from .conftest import bits

EX1 = LayeredCode.from_words(["0000", "1001", "1010", "0011"], 2, 2)
EX2 = LayeredCode.from_words(["0000", "0010", "1001", "1011"], 2, 2)


def code_of(*words):
    """Linear code spanned by bitstrings."""
    return LinearCode(len(words[0]), list(words))


# BitWord


def test_bitword_from_string():
    """Test that bitstrings and sequences give the same word."""
    assert BitWord("0101") == BitWord([0, 1, 0, 1])
    assert BitWord("0101").bits == (0, 1, 0, 1)
    assert str(BitWord("0101")) == "0101"
    assert repr(BitWord("01")) == "BitWord('01')"


@pytest.mark.parametrize("bad", ["012", "01 1", "x"])
def test_bitword_rejects_non_bits(bad):
    """Test that characters other than 0 and 1 are rejected."""
    with pytest.raises(ValueError):
        BitWord(bad)


def test_bitword_rejects_empty():
    """Test that a word needs at least one bit."""
    with pytest.raises(DimensionMismatchError):
        BitWord("")


def test_xor_and_schur():
    """Test GF(2) addition and the Schur product."""
    x, y = BitWord("1100"), BitWord("1010")
    assert x ^ y == BitWord("0110")
    assert x & y == BitWord("1000")
    assert schur("1100", "1010") == BitWord("1000")


def test_length_mismatch():
    """Test that words of different lengths can't be combined."""
    with pytest.raises(DimensionMismatchError):
        BitWord("10") ^ BitWord("101")
    with pytest.raises(DimensionMismatchError):
        BitWord("10") & BitWord("101")


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12), st.data())
def test_integer_sum_identity(x_bits, data):
    """Test x + y = (x ⊕ y) + 2 (x ∗ y) over the integers."""
    y_bits = data.draw(bits(len(x_bits)))
    x, y = BitWord(x_bits), BitWord(y_bits)
    integer_sum = x.to_array().astype(int) + y.to_array().astype(int)
    split = (x ^ y).to_array().astype(int) + 2 * (x & y).to_array().astype(int)
    assert (integer_sum == split).all()


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_schur_bilinear_exhaustive(length):
    """Test that ∗ is symmetric and distributes over ⊕, for every word triple."""
    words = [BitWord(list(w)) for w in product((0, 1), repeat=length)]
    for x, y in product(words, repeat=2):
        assert schur(x, y) == schur(y, x)
        for z in words:
            assert schur(x ^ y, z) == schur(x, z) ^ schur(y, z)


@given(st.integers(1, 8), st.data())
def test_schur_bilinear(length, data):
    """Test (x ⊕ x′) ∗ y = (x ∗ y) ⊕ (x′ ∗ y) on words up to length 8."""
    x, x2, y = (BitWord(data.draw(bits(length))) for _ in range(3))
    assert schur(x ^ x2, y) == schur(x, y) ^ schur(x2, y)


@pytest.mark.parametrize("length", range(1, 9))
def test_integer_sum_identity_exhaustive(length):
    """Test x + y = (x ⊕ y) + 2 (x ∗ y) for every pair of words."""
    words = [BitWord(list(w)) for w in product((0, 1), repeat=length)]
    for x, y in product(words, repeat=2):
        integer_sum = x.to_array().astype(int) + y.to_array().astype(int)
        split = (x ^ y).to_array().astype(int) + 2 * (x & y).to_array().astype(int)
        assert (integer_sum == split).all()


def test_weight_and_constructors():
    """Test the helper constructors and weight."""
    assert BitWord.zeros(3) == BitWord("000")
    assert BitWord.ones(3).weight == 3
    assert BitWord.unit(4, 2) == BitWord("0010")
    assert BitWord.zeros(5).is_zero
    assert BitWord.join([BitWord("10"), BitWord("01")]) == BitWord("1001")


def test_split_blocks():
    """Test splitting a word into levels."""
    assert split_blocks("100111", 2, 3) == [BitWord("10"), BitWord("01"), BitWord("11")]
    with pytest.raises(DimensionMismatchError):
        split_blocks("10011", 2, 3)


# Row reduction and codes


def test_rref():
    """Test row reduction of dependent generators."""
    rows, rank, pivots = rref(["110", "011", "101"])
    assert rows == [BitWord("101"), BitWord("011")]
    assert rank == 2
    assert pivots == [0, 1]


def test_rref_empty():
    """Test row reduction of no generators."""
    assert rref([]) == ([], 0, [])


def test_code_equality_is_span_equality():
    """Test that codes with different generators but the same span are equal."""
    assert code_of("110", "011") == code_of("101", "110", "011")
    assert code_of("110") != code_of("011")
    assert hash(code_of("110", "011")) == hash(code_of("011", "101"))


def test_membership():
    """Test membership by reduction against the basis."""
    code = code_of("110", "011")
    assert "101" in code
    assert BitWord("000") in code
    assert "100" not in code
    with pytest.raises(DimensionMismatchError):
        code.contains("10")


def test_subcode():
    """Test subspace containment."""
    assert repetition(4).is_subcode_of(even_parity(4))
    assert not even_parity(4).is_subcode_of(repetition(4))
    assert LinearCode.zero(4).is_subcode_of(repetition(4))


def test_from_words():
    """Test ingesting an explicit linear code."""
    code = LinearCode.from_words(["0000", "1001", "1010", "0011"])
    assert code.rank == 2
    assert code.size == 4


@pytest.mark.parametrize(
    "words,offender",
    [
        (["00", "11", "10"], "01"),
        (["00", "11", "11"], "11"),
        (["11"], "00"),
    ],
)
def test_from_words_not_linear(words, offender):
    """Test that a list which is not a linear code names the offending word."""
    with pytest.raises(NotLinearError) as info:
        LinearCode.from_words(words)
    assert info.value.word == BitWord(offender)


def test_from_words_large_code():
    """Test ingesting all 4096 Golay codewords, listed in reverse."""
    golay = golay24()
    words = list(golay.codewords())[::-1]
    assert LinearCode.from_words(words) == golay
    with pytest.raises(NotLinearError) as info:
        LinearCode.from_words(words[:-2] + words[-1:])
    assert info.value.word == words[-2]


def test_codeword_enumeration():
    """Test that enumeration lists every codeword once, zero first."""
    code = even_parity(4)
    words = list(code.codewords())
    assert len(words) == 8 == code.size
    assert words[0] == BitWord.zeros(4)
    assert len(set(words)) == 8
    assert all(w.weight % 2 == 0 for w in words)


def test_chunked_enumeration():
    """Test that chunks cover the code exactly."""
    code = even_parity(6)
    chunks = list(code.iter_codeword_arrays(chunk_size=5))
    assert sum(len(c) for c in chunks) == 32
    assert np.array_equal(np.vstack(chunks), code.codeword_array())


def test_random_codewords(rng):
    """Test that sampled words are codewords."""
    code = even_parity(8)
    words = code.random_codeword_array(50, rng)
    assert words.shape == (50, 8)
    assert code.contains_array(words).all()


def test_dual():
    """Test that the dual of the even-weight code is the repetition code."""
    assert dual(even_parity(5)) == repetition(5)
    assert dual(repetition(5)) == even_parity(5)
    assert dual(LinearCode.full(3)) == LinearCode.zero(3)


@given(st.integers(2, 7), st.data())
def test_parity_check_matrix(length, data):
    """Test H · cᵀ = 0 for every codeword and that H has full rank n - k."""
    rows = data.draw(st.lists(bits(length), max_size=4))
    code = LinearCode(length, rows)
    parity = parity_check_matrix(code).astype(int)
    assert parity.shape == (length - code.rank, length)
    products = (code.codeword_array().astype(int) @ parity.T) % 2
    assert not products.any()
    assert LinearCode.from_matrix(parity.reshape(-1, length)).rank == length - code.rank


# Weights


def _direct_weights(code):
    counts = {}
    for word in code.codeword_array():
        weight = int(word.sum())
        counts[weight] = counts.get(weight, 0) + 1
    return counts


@pytest.mark.parametrize(
    "code,expected",
    [
        (repetition(5), {0: 1, 5: 1}),
        (LinearCode.full(4), {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}),
        (even_parity(6), {0: 1, 2: 15, 4: 15, 6: 1}),
        (LinearCode.zero(3), {0: 1}),
    ],
)
def test_weight_distribution(code, expected):
    """Test weight distributions, through the code or its dual."""
    assert weight_distribution(code) == expected


@settings(max_examples=60)
@given(st.integers(1, 8), st.data())
def test_macwilliams_matches_enumeration(length, data):
    """Test that the dual route agrees with direct enumeration."""
    rows = data.draw(st.lists(bits(length), max_size=8))
    code = LinearCode(length, rows)
    assert weight_distribution(code) == _direct_weights(code)


def test_weight_distribution_cap():
    """Test that enumeration beyond the rank cap is refused."""
    small = Settings(weight_rank_cap=2)
    # The dual of the full space is trivial, so this is cheap
    assert weight_distribution(LinearCode.full(12), small)[12] == 1
    half = LinearCode(12, [BitWord.unit(12, i) for i in range(6)])
    with pytest.raises(EnumerationCapError):
        weight_distribution(half, small)


def test_minimum_distance():
    """Test minimum distance, including the zero code."""
    assert minimum_distance(repetition(7)) == 7
    assert minimum_distance(even_parity(7)) == 2
    assert minimum_distance(LinearCode.zero(3)) is None


def test_minimum_weight_word():
    """Test that the lexicographically first support is found."""
    assert minimum_weight_word(even_parity(4)) == BitWord("1100")
    assert minimum_weight_word(LinearCode.full(5)) == BitWord("10000")
    assert minimum_weight_word(repetition(3)) == BitWord("111")
    assert minimum_weight_word(LinearCode.zero(3)) is None


# Layered codes


def test_layered_code_shape():
    """Test that the code length must be n·L."""
    with pytest.raises(DimensionMismatchError):
        LayeredCode(LinearCode.full(5), 2, 2)


def test_projection_codes():
    """Test the projection codes of the small examples."""
    assert projection_code(EX1, 1) == code_of("10")
    assert projection_code(EX1, 2) == LinearCode.full(2)
    assert projection_code(EX2, 1) == code_of("10")
    assert projection_code(EX2, 2) == LinearCode.full(2)


def test_antiprojection_zero():
    """Test S_i(0) on the small examples."""
    assert antiprojection_zero(EX1, 2) == code_of("11")
    assert antiprojection_zero(EX1, 1) == LinearCode.zero(2)
    assert antiprojection_zero(EX2, 2) == code_of("10")
    assert antiprojection_zero(EX2, 1) == LinearCode.zero(2)


@pytest.mark.parametrize("level", [0, 3])
def test_level_out_of_range(level):
    """Test that levels are 1-based and bounded by L."""
    with pytest.raises(LevelIndexError):
        projection_code(EX1, level)
    with pytest.raises(LevelIndexError):
        antiprojection_zero(EX1, level)


def test_antiprojection_with_context():
    """Test S_2(c₁) for a realizable and an unrealizable context."""
    coset = antiprojection(EX1, 2, ["10"])
    assert coset is not None
    assert "01" in coset
    assert "10" in coset
    assert "00" not in coset
    assert antiprojection(EX1, 2, ["01"]) is None
    zero = antiprojection(EX1, 2, ["00"])
    assert zero is not None
    assert zero.code == antiprojection_zero(EX1, 2)


@settings(max_examples=40)
@given(st.integers(1, 3), st.integers(2, 3), st.data())
def test_antiprojection_matches_brute_force(n, levels, data):
    """Test S_i(context) against a scan of all codewords."""
    length = n * levels
    rows = data.draw(st.lists(bits(length), max_size=5))
    layered = LayeredCode.from_generators(rows, n, levels)
    level = data.draw(st.integers(1, levels))
    words = [layered.split(w) for w in layered.code.codewords()]
    context = words[data.draw(st.integers(0, len(words) - 1))]
    others = context[: level - 1] + context[level:]
    expected = {w[level - 1] for w in words if w[: level - 1] + w[level:] == others}
    coset = antiprojection(layered, level, others)
    assert coset is not None
    every_block = [BitWord(b) for b in LinearCode.full(n).codewords()]
    assert {b for b in every_block if b in coset} == expected


@settings(max_examples=40)
@given(st.integers(1, 3), st.integers(2, 3), st.data())
def test_antiprojection_zero_inside_projection(n, levels, data):
    """Test S_i(0) ⊆ P_i at every level."""
    rows = data.draw(st.lists(bits(n * levels), max_size=5))
    layered = LayeredCode.from_generators(rows, n, levels)
    for level in range(1, levels + 1):
        assert antiprojection_zero(layered, level).is_subcode_of(
            projection_code(layered, level)
        )


def test_product_code():
    """Test the product code and its detection."""
    product = LayeredCode.product([repetition(2), LinearCode.full(2)])
    assert product.rank == 3
    assert is_product_code(product)
    assert not is_product_code(EX1)
    assert product.contains_blocks(["11", "01"])
    assert not product.contains_blocks(["10", "01"])
