"""Handle formatting tokens."""
# pylint: disable=redefined-builtin

import blessings
from pygments import format
from pygments.formatter import Formatter

from .lexer import *

__all__ = [
    "STYLE_NAMES",
    "AnsiTerminalFormatter",
    "contains_failure",
    "format",
    "quiet_filter",
]

# blessings capability for each token type; anything else is printed unstyled
STYLE_NAMES = {
    Verdict.Pass: "green",
    Verdict.Fail: "bright_red",
    Verdict.Undecided: "yellow",
    Generic.Error: "bright_red",
    UI.Heading: "bold",
    UI.Caveat: "yellow",
    UI.Status: "blue",
    UI.Message: "dim",
    Comment.Single: "dim",
    Keyword: "blue",
    Bits: "cyan",
    Error: "bright_red",
}


def contains_failure(token_source):
    """Return whether a list of tokens contains a failed verdict or an error."""
    failures = (Verdict.Fail, Generic.Error)
    return any(token_type in failures for token_type, _ in token_source)


def quiet_filter(token_source):
    """Drop log messages, which are only shown in verbose mode."""
    return [token for token in token_source if token[0] != UI.Message]


class AnsiTerminalFormatter(Formatter):
    """Render report and code file tokens with ANSI styles."""

    def __init__(self, terminal=None):
        super().__init__()
        if terminal is None:
            terminal = blessings.Terminal()
        self.style = {
            token_type: getattr(terminal, name)
            for token_type, name in STYLE_NAMES.items()
        }

    def format_unencoded(self, token_source, outfile):
        """Write each token, styled if it has a style.

        Called internally by Formatter.format.
        """
        for token_type, value in token_source:
            assert "\n" not in value
            styler = self.style.get(token_type)
            outfile.write(styler(value) if styler else value)
