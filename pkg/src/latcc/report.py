"""Canonical JSON reports."""
import json
from fractions import Fraction
from typing import Any, Dict

import attr
import numpy as np
from attr import attrs

from .catalog import ExampleResult
from .gf2 import BitWord
from .latticeness import (
    Decomposition,
    LatticeVerdict,
    PointWitness,
    SchurWitness,
)
from .leech import LeechReport
from .status import EXIT_NEGATIVE, EXIT_OK, EXIT_UNDECIDED

__all__ = ["SCHEMA_VERSION", "Report", "to_jsonable"]

SCHEMA_VERSION = 1

# Properties serialized alongside the attributes
_DERIVED = {
    LatticeVerdict: ("status",),
    LeechReport: ("verdict",),
    SchurWitness: ("product",),
    Decomposition: ("reconstruct",),
    ExampleResult: ("passed",),
}

_STATUS_CODES = {
    "ok": EXIT_OK,
    "pass": EXIT_OK,
    "lattice": EXIT_OK,
    "fail": EXIT_NEGATIVE,
    "not-lattice": EXIT_NEGATIVE,
    "undecided": EXIT_UNDECIDED,
}


def _derived(value) -> Dict[str, Any]:
    extra = {}
    for name in _DERIVED.get(type(value), ()):
        member = getattr(value, name)
        extra[name] = member() if callable(member) else member
    return extra


def to_jsonable(value):
    """Convert a result object into JSON-compatible data.

    attrs instances become objects (with a few derived properties), words become
    bitstrings, fractions ``"p/q"`` strings and sets sorted lists.
    """
    # pylint: disable=too-many-return-statements
    if isinstance(value, PointWitness):
        return [list(value.left), list(value.right)]
    if isinstance(value, BitWord):
        return str(value)
    if attr.has(type(value)):
        data = attr.asdict(value, recurse=False)
        data.update(_derived(value))
        return {key: to_jsonable(item) for key, item in data.items()}
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


@attrs(frozen=True, auto_attribs=True)
class Report:
    """Result of one command, serializable as canonical JSON.

    Attributes:
        command: the subcommand that produced it.
        subject: the code file or builtin it concerns.
        status: ``ok``, ``pass``, ``fail``, ``lattice``, ``not-lattice`` or
            ``undecided``.
        result: the result object.
    """

    command: str
    subject: str
    status: str
    result: Any

    @property
    def exit_code(self) -> int:
        """Process exit code for the status."""
        return _STATUS_CODES[self.status]

    def to_json(self) -> str:
        """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
        data = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "subject": self.subject,
            "status": self.status,
            "result": to_jsonable(self.result),
        }
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
