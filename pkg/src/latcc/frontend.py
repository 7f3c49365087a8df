"""Terminal output of reports."""
import sys
from typing import Any, List, Optional, Tuple

# pylint: disable=redefined-builtin
from .formatter import AnsiTerminalFormatter, contains_failure, format, quiet_filter
from .lexer import UI, CodeFileLexer, Generic, Text, Verdict, lex
from .status import Tally

VERDICT_LABELS = {
    True: (Verdict.Pass, "PASS"),
    False: (Verdict.Fail, "FAIL"),
    None: (Verdict.Undecided, "UNDECIDED"),
}


class BasicFrontend:
    """Print highlighted report lines, keeping a tally of verdicts."""

    def __init__(self, quiet=False, bell_on_failure=False):
        self.quiet = quiet
        self.bell_on_failure = bell_on_failure
        self.tally = Tally()
        self.lexer = CodeFileLexer()
        self.formatter = AnsiTerminalFormatter()

    def _write(self, raw_value):
        """Write directly to the underlying output."""
        sys.stdout.write(raw_value)
        sys.stdout.flush()

    def _print_tokens(self, tokens: List[Tuple[Any, str]], end="\n"):
        """Highlight and print a list of tokens, updating the tally."""
        if not tokens:
            # Make sure blank lines get printed
            self._write(end)
            return
        if self.quiet:
            tokens = quiet_filter(tokens)
        if self.bell_on_failure and contains_failure(tokens):
            end += "\a"
        if tokens:
            # Skip line if it's now empty to avoid lone newline
            self._write(format(tokens, self.formatter) + end)
        self.tally = self.tally.update(tokens)

    def log(self, message):
        """Print a log message (hidden in quiet mode)."""
        self._print_tokens([(UI.Message, message)])

    def heading(self, text):
        """Print a section heading."""
        self._print_tokens([(UI.Heading, text)])

    def print(self, value: str = ""):
        """Print a line of plain text."""
        self._print_tokens([(Text, value)] if value else [])

    def field(self, name: str, value):
        """Print a ``name: value`` line."""
        self._print_tokens([(UI.Heading, f"{name}:"), (Text, f" {value}")])

    def verdict(self, outcome: Optional[bool], label: str, detail: str = ""):
        """Print a PASS, FAIL or UNDECIDED line and count it."""
        token_type, word = VERDICT_LABELS[outcome]
        tokens = [(token_type, word), (Text, f" {label}")]
        if detail:
            tokens.append((UI.Message, f" ({detail})"))
        self._print_tokens(tokens)

    def caveat(self, text):
        """Print a highlighted caveat."""
        self._print_tokens([(UI.Caveat, f"note: {text}")])

    def error(self, text):
        """Print an error line."""
        self._print_tokens([(Generic.Error, f"error: {text}")])

    def print_code(self, text: str):
        """Print code file text with syntax highlighting."""
        for line in text.splitlines():
            self._print_tokens(lex(line, self.lexer))

    def summary(self):
        """Print the tally of verdicts so far."""
        self._print_tokens([(UI.Status, self.tally.format_status())])


class ReportOnlyFrontend(BasicFrontend):
    """Frontend for JSON mode: print nothing but errors, which go to stderr."""

    def _write(self, raw_value):
        pass

    def error(self, text):
        """Print an error line to stderr."""
        sys.stderr.write(f"error: {text}\n")
