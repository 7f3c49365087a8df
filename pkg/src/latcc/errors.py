"""Exceptions raised by the library.

Library functions raise these; only the command-line interface turns them into
exit codes.
"""


class LatccError(Exception):
    """Base class for all latcc errors."""


class DimensionMismatchError(LatccError, ValueError):
    """Words, codes or points with incompatible lengths were combined."""


class NotLinearError(LatccError, ValueError):
    """An explicit list of codewords is not a linear code.

    Attributes:
        word: the offending word, either a repeated entry or a member of the span
            which is missing from the list.
    """

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class UnknownCodeError(LatccError, KeyError):
    """No code (or builtin example) with the requested name."""

    def __str__(self):
        # KeyError quotes its argument
        return str(self.args[0])


class LevelIndexError(LatccError, IndexError):
    """A level index outside 1..L."""


class NotNestedError(LatccError, ValueError):
    """A family of codes was required to be nested but is not."""


class EnumerationCapError(LatccError):
    """Explicit enumeration would exceed the configured cap."""


class ImplicitModeError(LatccError):
    """The operation needs an explicit coset list but the constellation is implicit."""


class InapplicableError(LatccError):
    """A theorem was invoked without its premise holding."""


class CodeFileError(LatccError, ValueError):
    """A code file could not be parsed.

    Attributes:
        line: 1-based line number of the problem, or None if it concerns the whole
            file.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
