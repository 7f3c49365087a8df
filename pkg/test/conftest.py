"""pytest configuration file."""
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from latcc.catalog import builtin_code


@pytest.fixture
def in_temp_dir(tmpdir):
    """Create a temporary directory and change to it for the duration of the test."""
    with tmpdir.as_cwd():
        yield Path(str(tmpdir))


@pytest.fixture
def rng():
    """A seeded random generator, so failures are reproducible."""
    return np.random.default_rng(2024)


@pytest.fixture(scope="session")
def leech():
    """The Leech layered code (built once, it is immutable)."""
    return builtin_code("leech")


def bits(length: int):
    """Strategy for a list of `length` bits."""
    return st.lists(st.integers(0, 1), min_size=length, max_size=length)


def write_code_file(path: Path, n: int, levels: int, mode: str, words) -> Path:
    """Write a code file with the given header and words."""
    lines = [f"n={n} L={levels}", f"mode={mode}"] + list(words)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
