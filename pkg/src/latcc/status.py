"""Keep a tally of check outcomes and turn it into an exit code."""

from attr import attrs

from .lexer import Verdict

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_INPUT_ERROR = 3


@attrs(auto_attribs=True, frozen=True)
class Tally:
    """Counts of passed, failed and undecided outcomes printed so far."""

    passed: int = 0
    failed: int = 0
    undecided: int = 0

    def update(self, token_source):
        """Count the verdict tokens in a list of tokens."""
        passed, failed, undecided = self.passed, self.failed, self.undecided
        for token_type, _ in token_source:
            if token_type == Verdict.Pass:
                passed += 1
            elif token_type == Verdict.Fail:
                failed += 1
            elif token_type == Verdict.Undecided:
                undecided += 1
        return Tally(passed, failed, undecided)

    @property
    def exit_code(self) -> int:
        """1 if anything failed, otherwise 2 if anything was undecided, else 0."""
        if self.failed:
            return EXIT_NEGATIVE
        if self.undecided:
            return EXIT_UNDECIDED
        return EXIT_OK

    def format_status(self):
        """Return the tally as a one-line summary."""
        parts = [f"{self.passed} passed"]
        if self.failed:
            parts.append(f"{self.failed} failed")
        if self.undecided:
            parts.append(f"{self.undecided} undecided")
        return ", ".join(parts)
