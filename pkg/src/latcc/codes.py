"""Named binary codes: repetition, even parity and the extended Golay code."""
from typing import Optional

import numpy as np

from .errors import DimensionMismatchError, UnknownCodeError
from .gf2 import BitWord, LinearCode

__all__ = [
    "GOLAY_B",
    "CODE_NAMES",
    "code_library",
    "even_parity",
    "golay24",
    "golay_parity_check",
    "repetition",
]

# The 12×12 block of the [24,12,8] Golay generator (I₁₂ | B) and parity check
# (B | I₁₂), in printed row order.
GOLAY_B = np.array(
    [
        [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1],
        [1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1],
        [0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1],
        [1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
        [1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
        [0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1],
        [1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1],
        [0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1],
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
    ],
    dtype=np.uint8,
)
GOLAY_B.setflags(write=False)

GOLAY_LENGTH = 24


def repetition(length: int) -> LinearCode:
    """Repetition code {0ⁿ, 1ⁿ}."""
    return LinearCode(length, [BitWord.ones(length)])


def even_parity(length: int) -> LinearCode:
    """Even-weight code of rank n - 1, spanned by e_i ⊕ e_{i+1}."""
    return LinearCode(
        length,
        [
            BitWord.unit(length, i) ^ BitWord.unit(length, i + 1)
            for i in range(length - 1)
        ],
    )


def golay_generator_matrix() -> np.ndarray:
    """Generator matrix (I₁₂ | B) whose rows are the columns of (I over B)."""
    return np.hstack([np.eye(12, dtype=np.uint8), GOLAY_B.T])


def golay_parity_check() -> np.ndarray:
    """Parity-check matrix H = (B | I₁₂)."""
    return np.hstack([GOLAY_B, np.eye(12, dtype=np.uint8)])


def golay24() -> LinearCode:
    """The [24,12,8] extended binary Golay code."""
    return LinearCode.from_matrix(golay_generator_matrix())


def _golay(length: int) -> LinearCode:
    if length != GOLAY_LENGTH:
        raise DimensionMismatchError(f"golay24 has length 24, not {length}")
    return golay24()


_LIBRARY = {
    "repetition": repetition,
    "even_parity": even_parity,
    "golay24": _golay,
}
CODE_NAMES = tuple(_LIBRARY)


def code_library(name: str, length: Optional[int] = None) -> LinearCode:
    """Look up a named code.

    Args:
        name: one of ``repetition``, ``even_parity`` or ``golay24``.
        length: block length; optional for ``golay24``, which fixes it at 24.
    """
    try:
        factory = _LIBRARY[name]
    except KeyError:
        raise UnknownCodeError(
            f"unknown code {name!r}, expected one of {', '.join(CODE_NAMES)}"
        ) from None
    if length is None:
        if name != "golay24":
            raise DimensionMismatchError(f"{name} needs a length")
        length = GOLAY_LENGTH
    if length < 1:
        raise DimensionMismatchError("code length must be positive")
    return factory(length)
