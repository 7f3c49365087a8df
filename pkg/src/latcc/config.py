"""Runtime settings."""
import os
from typing import Mapping, Optional

from attr import attrs

from .errors import LatccError

ENUM_CAP_VARIABLE = "LATCC_ENUM_CAP"
SEED_VARIABLE = "LATCC_SEED"


def _positive_int(name: str, value: str) -> int:
    try:
        parsed = int(value, 0)
    except ValueError:
        raise LatccError(f"{name} must be an integer, got {value!r}") from None
    if parsed < 1:
        raise LatccError(f"{name} must be positive, got {parsed}")
    return parsed


@attrs(auto_attribs=True, frozen=True)
class Settings:
    """Limits and seeds shared by the library and the CLI.

    Attributes:
        enum_cap: largest number of points (or codewords) any explicit enumeration
            may produce.
        weight_rank_cap: largest rank enumerated when computing a weight
            distribution (applied to the smaller of a code and its dual).
        seed: seed for sampled checks.
    """

    enum_cap: int = 2 ** 24
    weight_rank_cap: int = 24
    seed: int = 0

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings, overriding defaults from LATCC_ENUM_CAP and LATCC_SEED."""
        if environ is None:
            environ = os.environ
        kwargs = {}
        if environ.get(ENUM_CAP_VARIABLE):
            kwargs["enum_cap"] = _positive_int(
                ENUM_CAP_VARIABLE, environ[ENUM_CAP_VARIABLE]
            )
        if environ.get(SEED_VARIABLE):
            try:
                kwargs["seed"] = int(environ[SEED_VARIABLE])
            except ValueError:
                raise LatccError(
                    f"{SEED_VARIABLE} must be an integer, "
                    f"got {environ[SEED_VARIABLE]!r}"
                ) from None
        return cls(**kwargs)


DEFAULT_SETTINGS = Settings()
