"""Exact GF(2) linear algebra and binary linear codes.

Codes are stored by a generator matrix kept in reduced row-echelon form, so
membership, containment and equality are rank computations rather than scans of
the codeword list.  Bit order within a word is index-ascending, left to right.
"""
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import attr
import numpy as np
from attr import attrs

from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    DimensionMismatchError,
    EnumerationCapError,
    LevelIndexError,
    NotLinearError,
)

__all__ = [
    "BitWord",
    "CodeCoset",
    "LayeredCode",
    "LinearCode",
    "antiprojection",
    "antiprojection_zero",
    "dual",
    "is_product_code",
    "minimum_distance",
    "minimum_weight_word",
    "parity_check_matrix",
    "projection_code",
    "rref",
    "schur",
    "split_blocks",
    "weight_distribution",
]

WordLike = Union["BitWord", str, Sequence[int]]

# Number of codewords materialized at once while enumerating
CHUNK_SIZE = 1 << 16


def _to_bits(value) -> Tuple[int, ...]:
    if isinstance(value, BitWord):
        return value.bits
    if isinstance(value, str):
        value = value.strip()
        if value.strip("01"):
            raise ValueError(f"not a bitstring: {value!r}")
        return tuple(int(b) for b in value)
    bits = tuple(int(b) for b in value)
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {bits}")
    return bits


@attrs(frozen=True, slots=True, repr=False)
class BitWord:
    """Fixed-length vector over GF(2).

    ``x ^ y`` is the sum in GF(2)^n and ``x & y`` the Schur (coordinatewise)
    product.
    """

    bits: Tuple[int, ...] = attr.ib(converter=_to_bits)

    @bits.validator
    def _check_length(self, attribute, value):
        # pylint: disable=unused-argument
        if not value:
            raise DimensionMismatchError("a BitWord needs at least one bit")

    @classmethod
    def zeros(cls, length: int) -> "BitWord":
        """The all-zero word."""
        return cls((0,) * length)

    @classmethod
    def ones(cls, length: int) -> "BitWord":
        """The all-one word."""
        return cls((1,) * length)

    @classmethod
    def unit(cls, length: int, index: int) -> "BitWord":
        """The word with a single one at (0-based) ``index``."""
        bits = [0] * length
        bits[index] = 1
        return cls(bits)

    @classmethod
    def from_array(cls, array) -> "BitWord":
        """Convert a 1-d array of 0s and 1s."""
        return cls(np.asarray(array, dtype=np.uint8).tolist())

    @classmethod
    def join(cls, words: Iterable["BitWord"]) -> "BitWord":
        """Concatenate words (the inverse of :func:`split_blocks`)."""
        bits: Tuple[int, ...] = ()
        for word in words:
            bits += BitWord(word).bits
        return cls(bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, index):
        return self.bits[index]

    def _check_same_length(self, other: "BitWord"):
        if len(self) != len(other):
            raise DimensionMismatchError(
                f"words have different lengths ({len(self)} and {len(other)})"
            )

    def __xor__(self, other: "BitWord") -> "BitWord":
        self._check_same_length(other)
        return BitWord(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __and__(self, other: "BitWord") -> "BitWord":
        self._check_same_length(other)
        return BitWord(tuple(a & b for a, b in zip(self.bits, other.bits)))

    @property
    def weight(self) -> int:
        """Hamming weight."""
        return sum(self.bits)

    @property
    def is_zero(self) -> bool:
        """Whether every bit is zero."""
        return not any(self.bits)

    def to_array(self) -> np.ndarray:
        """The bits as a uint8 array."""
        return np.array(self.bits, dtype=np.uint8)

    def __str__(self):
        return "".join(str(b) for b in self.bits)

    def __repr__(self):
        return f"BitWord({str(self)!r})"


def schur(x: WordLike, y: WordLike) -> BitWord:
    """Schur product x ∗ y, the coordinatewise product of two words.

    As integer vectors x + y = (x ⊕ y) + 2 (x ∗ y).
    """
    return BitWord(x) & BitWord(y)


def split_blocks(word: WordLike, block_length: int, levels: int) -> List[BitWord]:
    """Split a word of length n·L into L consecutive blocks of length n."""
    word = BitWord(word)
    if block_length < 1 or levels < 1 or len(word) != block_length * levels:
        raise DimensionMismatchError(
            f"cannot split a word of length {len(word)} into {levels} blocks of "
            f"length {block_length}"
        )
    return [
        BitWord(word.bits[i * block_length : (i + 1) * block_length])
        for i in range(levels)
    ]


# Matrix helpers.  Matrices are uint8 arrays holding 0/1 entries.


def _rref_matrix(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Row-reduce a binary matrix to reduced row-echelon form over GF(2).

    Returns:
        The nonzero rows of the reduced matrix and their pivot columns.
    """
    reduced = np.array(matrix, dtype=np.uint8) % 2
    rows, cols = reduced.shape
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.flatnonzero(reduced[row:, col])
        if candidates.size == 0:
            continue
        found = row + int(candidates[0])
        if found != row:
            reduced[[row, found]] = reduced[[found, row]]
        # Clear the column above and below the pivot
        others = np.flatnonzero(reduced[:, col])
        others = others[others != row]
        reduced[others] ^= reduced[row]
        pivots.append(col)
        row += 1
    return reduced[:row].copy(), pivots


def _reduce_rows(basis: np.ndarray, pivots: Sequence[int], words: np.ndarray):
    """Reduce each row of ``words`` against an RREF basis, in place.

    A row ends up zero exactly when it lies in the row space of ``basis``.
    """
    for row, pivot in enumerate(pivots):
        hits = words[:, pivot] == 1
        if hits.any():
            words[hits] ^= basis[row]
    return words


def _nullspace(basis: np.ndarray, pivots: Sequence[int], length: int) -> np.ndarray:
    """Basis of {x : basis · xᵀ = 0} from an RREF matrix and its pivots."""
    free = [col for col in range(length) if col not in set(pivots)]
    null = np.zeros((len(free), length), dtype=np.uint8)
    for i, col in enumerate(free):
        null[i, col] = 1
        for row, pivot in enumerate(pivots):
            null[i, pivot] = basis[row, col]
    return null


def _coefficients(start: int, stop: int, rank: int) -> np.ndarray:
    """Rows are the binary expansions (LSB first) of start..stop-1."""
    indices = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(rank, dtype=np.int64)
    return ((indices[:, None] >> shifts) & 1).astype(np.uint8)


def rref(generators: Sequence[WordLike]) -> Tuple[List[BitWord], int, List[int]]:
    """Reduced row-echelon form of a list of equal-length words.

    Returns:
        (reduced rows, rank, pivot columns); the rows span the same space as the
        input and there are exactly ``rank`` of them.
    """
    words = [BitWord(g) for g in generators]
    if not words:
        return [], 0, []
    length = len(words[0])
    if any(len(w) != length for w in words):
        raise DimensionMismatchError("generators have different lengths")
    reduced, pivots = _rref_matrix(np.array([w.bits for w in words], dtype=np.uint8))
    return [BitWord.from_array(row) for row in reduced], len(pivots), pivots


@attrs(frozen=True, eq=False, repr=False)
class LinearCode:
    """Binary linear code given by generators (which may be dependent).

    Attributes:
        length: block length n.
        generators: the words the code was built from.
        basis: the generators in reduced row-echelon form (read-only, rank × n).
        pivots: pivot column of each basis row.
    """

    length: int = attr.ib()
    generators: Tuple[BitWord, ...] = attr.ib(
        default=(), converter=lambda gs: tuple(BitWord(g) for g in gs)
    )
    basis: np.ndarray = attr.ib(init=False)
    pivots: Tuple[int, ...] = attr.ib(init=False)

    def __attrs_post_init__(self):
        if self.length < 1:
            raise DimensionMismatchError("code length must be positive")
        for generator in self.generators:
            if len(generator) != self.length:
                raise DimensionMismatchError(
                    f"generator {generator} does not have length {self.length}"
                )
        matrix = np.array([g.bits for g in self.generators], dtype=np.uint8)
        basis, pivots = _rref_matrix(matrix.reshape(-1, self.length))
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def from_matrix(cls, matrix) -> "LinearCode":
        """Code spanned by the rows of a 0/1 matrix."""
        matrix = np.asarray(matrix, dtype=np.uint8)
        return cls(matrix.shape[1], [BitWord.from_array(row) for row in matrix])

    @classmethod
    def from_words(
        cls, words: Iterable[WordLike], length: Optional[int] = None
    ) -> "LinearCode":
        """Ingest an explicit list of codewords, checking that it is a linear code.

        Raises:
            NotLinearError: if a word is repeated, the zero word is missing, or the
                list is not closed under ⊕.  The error's ``word`` is the offender.
        """
        words = [BitWord(w) for w in words]
        if not words:
            raise NotLinearError("a code needs at least the zero word")
        if length is None:
            length = len(words[0])
        seen = set()
        for word in words:
            if len(word) != length:
                raise DimensionMismatchError(
                    f"codeword {word} does not have length {length}"
                )
            if word in seen:
                raise NotLinearError(f"codeword {word} is listed twice", word)
            seen.add(word)
        zero = BitWord.zeros(length)
        if zero not in seen:
            raise NotLinearError(f"the zero word {zero} is missing", zero)
        code = cls(length, words)
        # The words are distinct members of their span, so equal sizes mean equal sets
        if code.size != len(words):
            missing = next(w for w in code.codewords() if w not in seen)
            raise NotLinearError(
                f"span word {missing} is missing, so the list is not a linear code",
                missing,
            )
        return code

    @classmethod
    def full(cls, length: int) -> "LinearCode":
        """The whole space F₂ⁿ."""
        return cls(length, [BitWord.unit(length, i) for i in range(length)])

    @classmethod
    def zero(cls, length: int) -> "LinearCode":
        """The code containing only the zero word."""
        return cls(length)

    @property
    def rank(self) -> int:
        """Dimension of the code."""
        return len(self.pivots)

    @property
    def size(self) -> int:
        """Number of codewords, 2^rank."""
        return 2 ** self.rank

    @property
    def reduced_generators(self) -> List[BitWord]:
        """The RREF basis as words, in pivot order."""
        return [BitWord.from_array(row) for row in self.basis]

    def contains_array(self, words: np.ndarray) -> np.ndarray:
        """Membership of each row of a 0/1 matrix, as a boolean array."""
        words = np.array(words, dtype=np.uint8, ndmin=2)
        if words.shape[1] != self.length:
            raise DimensionMismatchError(
                f"words have length {words.shape[1]}, code has length {self.length}"
            )
        return ~_reduce_rows(self.basis, self.pivots, words).any(axis=1)

    def contains(self, word: WordLike) -> bool:
        """Whether a word is a codeword."""
        return bool(self.contains_array(BitWord(word).to_array())[0])

    def __contains__(self, word):
        return self.contains(word)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        """Whether every codeword of this code lies in ``other``."""
        if self.length != other.length:
            raise DimensionMismatchError("codes have different lengths")
        if self.rank == 0:
            return True
        return bool(other.contains_array(self.basis).all())

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.length, self.basis.tobytes()))

    def __repr__(self):
        return f"LinearCode(length={self.length}, rank={self.rank})"

    def codeword_array(self, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
        """Codewords number start..stop-1 (in coefficient order) as matrix rows."""
        stop = self.size if stop is None else min(stop, self.size)
        coefficients = _coefficients(start, stop, self.rank).astype(np.int64)
        return ((coefficients @ self.basis.astype(np.int64)) & 1).astype(np.uint8)

    def random_codeword_array(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """``count`` uniformly random codewords as matrix rows."""
        coefficients = rng.integers(0, 2, size=(count, self.rank), dtype=np.int64)
        return ((coefficients @ self.basis.astype(np.int64)) & 1).astype(np.uint8)

    def iter_codeword_arrays(
        self, chunk_size: int = CHUNK_SIZE
    ) -> Iterator[np.ndarray]:
        """Enumerate all codewords in chunks of at most ``chunk_size`` rows."""
        for start in range(0, self.size, chunk_size):
            yield self.codeword_array(start, start + chunk_size)

    def codewords(self) -> Iterator[BitWord]:
        """Enumerate all 2^rank codewords; the zero word comes first."""
        for chunk in self.iter_codeword_arrays():
            for row in chunk:
                yield BitWord.from_array(row)


@attrs(frozen=True, auto_attribs=True)
class CodeCoset:
    """An affine set ``offset ⊕ code``."""

    offset: BitWord
    code: LinearCode

    def __contains__(self, word):
        return (BitWord(word) ^ self.offset) in self.code


def dual(code: LinearCode) -> LinearCode:
    """The dual code {x : x · c = 0 for every codeword c}."""
    null = _nullspace(code.basis, code.pivots, code.length)
    return LinearCode(code.length, [BitWord.from_array(row) for row in null])


def parity_check_matrix(code: LinearCode) -> np.ndarray:
    """A matrix H with H · cᵀ = 0 exactly for the codewords c."""
    return _nullspace(code.basis, code.pivots, code.length)


def _enumerate_weights(code: LinearCode) -> np.ndarray:
    counts = np.zeros(code.length + 1, dtype=np.int64)
    for chunk in code.iter_codeword_arrays():
        counts += np.bincount(
            chunk.sum(axis=1, dtype=np.int64), minlength=code.length + 1
        )
    return counts


def _krawtchouk(length: int, degree: int, weight: int) -> int:
    return sum(
        (-1) ** s * comb(weight, s) * comb(length - weight, degree - s)
        for s in range(degree + 1)
    )


def _macwilliams(dual_counts: np.ndarray, length: int, dual_rank: int) -> List[int]:
    """Weight counts of a code from those of its dual."""
    counts = []
    for degree in range(length + 1):
        total = sum(
            int(dual_counts[weight]) * _krawtchouk(length, degree, weight)
            for weight in range(length + 1)
            if dual_counts[weight]
        )
        count, remainder = divmod(total, 2 ** dual_rank)
        assert remainder == 0, "MacWilliams transform must be integral"
        counts.append(count)
    return counts


def weight_distribution(
    code: LinearCode, settings: Settings = DEFAULT_SETTINGS
) -> Dict[int, int]:
    """Map each Hamming weight to the number of codewords of that weight.

    Enumerates the code or, when it is smaller, its dual (applying the MacWilliams
    identity), so the enumeration cap applies to min(rank, n - rank).

    Raises:
        EnumerationCapError: if both the code and its dual are too large.
    """
    dual_rank = code.length - code.rank
    if min(code.rank, dual_rank) > settings.weight_rank_cap:
        raise EnumerationCapError(
            f"a code of rank {code.rank} and length {code.length} is too large to "
            f"enumerate (cap is rank {settings.weight_rank_cap})"
        )
    if code.rank <= dual_rank:
        counts = list(_enumerate_weights(code))
    else:
        counts = _macwilliams(_enumerate_weights(dual(code)), code.length, dual_rank)
    return {weight: int(count) for weight, count in enumerate(counts) if count}


def minimum_distance(
    code: LinearCode, settings: Settings = DEFAULT_SETTINGS
) -> Optional[int]:
    """Smallest nonzero weight, or None for the zero code."""
    weights = [w for w in weight_distribution(code, settings) if w > 0]
    return min(weights) if weights else None


def minimum_weight_word(
    code: LinearCode, settings: Settings = DEFAULT_SETTINGS
) -> Optional[BitWord]:
    """A nonzero codeword of minimum weight, or None for the zero code.

    Supports of the minimum weight are tried in lexicographic order when there
    are fewer of them than codewords; otherwise the code is scanned in
    enumeration order.
    """
    if code.rank == 0:
        return None
    distance = minimum_distance(code, settings)
    assert distance is not None
    supports = comb(code.length, distance)
    if supports <= min(code.size, settings.enum_cap):
        for support in combinations(range(code.length), distance):
            bits = [0] * code.length
            for index in support:
                bits[index] = 1
            if code.contains(bits):
                return BitWord(bits)
        raise AssertionError("no codeword of the minimum weight found")
    if code.size > settings.enum_cap:
        raise EnumerationCapError(
            f"too many codewords and weight-{distance} supports to search"
        )
    for chunk in code.iter_codeword_arrays():
        weights = chunk.sum(axis=1, dtype=np.int64)
        matches = np.nonzero(weights == distance)[0]
        if len(matches):
            return BitWord.from_array(chunk[matches[0]])
    raise AssertionError("no codeword of the minimum weight found")


@attrs(frozen=True, auto_attribs=True)
class LayeredCode:
    """A code of length n·L read as L consecutive blocks of length n.

    Attributes:
        code: the code C ⊆ F₂^{nL}.
        block_length: n.
        levels: L.
    """

    code: LinearCode
    block_length: int
    levels: int

    def __attrs_post_init__(self):
        if self.block_length < 1 or self.levels < 1:
            raise DimensionMismatchError("block length and levels must be positive")
        if self.code.length != self.block_length * self.levels:
            raise DimensionMismatchError(
                f"code length {self.code.length} is not {self.block_length}·"
                f"{self.levels}"
            )

    @classmethod
    def from_words(
        cls, words: Iterable[WordLike], block_length: int, levels: int
    ) -> "LayeredCode":
        """Layered code from an explicit (linear) list of codewords."""
        code = LinearCode.from_words(words, block_length * levels)
        return cls(code, block_length, levels)

    @classmethod
    def from_generators(
        cls, generators: Iterable[WordLike], block_length: int, levels: int
    ) -> "LayeredCode":
        """Layered code spanned by (possibly dependent) generators."""
        code = LinearCode(block_length * levels, list(generators))
        return cls(code, block_length, levels)

    @classmethod
    def product(cls, codes: Sequence[LinearCode]) -> "LayeredCode":
        """The product code C₁ × … × C_L."""
        length = codes[0].length
        if any(c.length != length for c in codes):
            raise DimensionMismatchError("level codes have different lengths")
        generators = []
        for level, code in enumerate(codes):
            for row in code.reduced_generators:
                blocks = [BitWord.zeros(length)] * len(codes)
                blocks[level] = row
                generators.append(BitWord.join(blocks))
        return cls.from_generators(generators, length, len(codes))

    @property
    def rank(self) -> int:
        """Dimension of the whole code."""
        return self.code.rank

    def split(self, word: WordLike) -> List[BitWord]:
        """Blocks (c₁, …, c_L) of a word of length n·L."""
        return split_blocks(word, self.block_length, self.levels)

    def join(self, blocks: Sequence[WordLike]) -> BitWord:
        """Concatenate L blocks into a word of length n·L."""
        if len(blocks) != self.levels:
            raise DimensionMismatchError(
                f"expected {self.levels} blocks, got {len(blocks)}"
            )
        blocks = [BitWord(b) for b in blocks]
        if any(len(b) != self.block_length for b in blocks):
            raise DimensionMismatchError(
                f"blocks must have length {self.block_length}"
            )
        return BitWord.join(blocks)

    def contains_blocks(self, blocks: Sequence[WordLike]) -> bool:
        """Whether (c₁, …, c_L) is a codeword."""
        return self.code.contains(self.join(blocks))

    def block_columns(self, level: int) -> np.ndarray:
        """Column indices of the (1-based) level's block."""
        _check_level(self, level)
        start = (level - 1) * self.block_length
        return np.arange(start, start + self.block_length)


def _check_level(layered: LayeredCode, level: int):
    if not 1 <= level <= layered.levels:
        raise LevelIndexError(f"level {level} is not in 1..{layered.levels}")


def projection_code(layered: LayeredCode, level: int) -> LinearCode:
    """Projection code C_i: the i-th blocks of all codewords (1-based level)."""
    columns = layered.block_columns(level)
    block = layered.code.basis[:, columns]
    return LinearCode.from_matrix(block.reshape(-1, len(columns)))


def _split_columns(layered: LayeredCode, level: int) -> Tuple[np.ndarray, np.ndarray]:
    block = layered.block_columns(level)
    others = np.setdiff1d(np.arange(layered.code.length), block)
    return others, block


def _context_reduced(layered: LayeredCode, level: int) -> Tuple[np.ndarray, List[int]]:
    """RREF of the code with the other blocks' columns moved to the front."""
    others, block = _split_columns(layered, level)
    permuted = layered.code.basis[:, np.concatenate([others, block])]
    return _rref_matrix(permuted.reshape(-1, layered.code.length))


def antiprojection_zero(layered: LayeredCode, level: int) -> LinearCode:
    """Antiprojection S_i(0, …, 0): the blocks c_i with (0, …, c_i, …, 0) ∈ C.

    Computed by row reduction with the other blocks' columns first: the rows whose
    pivots fall in block i vanish on every other block and span the subcode.
    """
    _check_level(layered, level)
    reduced, pivots = _context_reduced(layered, level)
    split = layered.code.length - layered.block_length
    rows = [row for row, pivot in enumerate(pivots) if pivot >= split]
    return LinearCode.from_matrix(
        reduced[rows, split:].reshape(-1, layered.block_length)
    )


def antiprojection(
    layered: LayeredCode, level: int, context: Sequence[WordLike]
) -> Optional[CodeCoset]:
    """Antiprojection S_i(c₁, …, c_{i-1}, c_{i+1}, …, c_L) for fixed other blocks.

    Args:
        layered: the layered code.
        level: the free level i (1-based).
        context: the other L-1 blocks, in level order.

    Returns:
        The set of compatible blocks c_i as a coset of S_i(0, …, 0), or None if no
        codeword has the given other blocks.
    """
    _check_level(layered, level)
    if len(context) != layered.levels - 1:
        raise DimensionMismatchError(
            f"expected {layered.levels - 1} context blocks, got {len(context)}"
        )
    split = layered.code.length - layered.block_length
    if context:
        target = BitWord.join(context).to_array()
        if len(target) != split:
            raise DimensionMismatchError(
                f"context blocks must have length {layered.block_length}"
            )
    else:
        target = np.zeros(0, dtype=np.uint8)
    reduced, pivots = _context_reduced(layered, level)
    combination = np.zeros(layered.code.length, dtype=np.uint8)
    for row, pivot in enumerate(pivots):
        if pivot < split and target[pivot]:
            target = target ^ reduced[row, :split]
            combination ^= reduced[row]
    if target.any():
        return None
    offset = BitWord.from_array(combination[split:])
    return CodeCoset(offset, antiprojection_zero(layered, level))


def is_product_code(layered: LayeredCode) -> bool:
    """Whether C = C₁ × … × C_L, i.e. the levels are independent."""
    projected = sum(
        projection_code(layered, level).rank
        for level in range(1, layered.levels + 1)
    )
    return projected == layered.rank
