"""Tests for config module."""

import pytest

from latcc.config import Settings
from latcc.errors import LatccError


def test_defaults():
    """Test the default limits."""
    settings = Settings.from_env({})
    assert settings == Settings()
    assert settings.enum_cap == 2 ** 24
    assert settings.seed == 0


def test_from_env():
    """Test overriding the cap and seed from the environment."""
    settings = Settings.from_env({"LATCC_ENUM_CAP": "0x100", "LATCC_SEED": "7"})
    assert settings.enum_cap == 256
    assert settings.seed == 7


def test_empty_variables_are_ignored():
    """Test that empty variables leave the defaults alone."""
    assert Settings.from_env({"LATCC_ENUM_CAP": "", "LATCC_SEED": ""}) == Settings()


@pytest.mark.parametrize(
    "environ",
    [
        {"LATCC_ENUM_CAP": "many"},
        {"LATCC_ENUM_CAP": "0"},
        {"LATCC_ENUM_CAP": "-5"},
        {"LATCC_SEED": "1.5"},
    ],
)
def test_bad_values(environ):
    """Test that bad values are reported."""
    with pytest.raises(LatccError):
        Settings.from_env(environ)


def test_reads_os_environ(monkeypatch):
    """Test that the process environment is the default source."""
    monkeypatch.setenv("LATCC_ENUM_CAP", "1000")
    monkeypatch.delenv("LATCC_SEED", raising=False)
    assert Settings.from_env().enum_cap == 1000
