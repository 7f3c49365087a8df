"""Reading layered codes from text files."""
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import attr
from attr import attrs

from .errors import CodeFileError, NotLinearError
from .gf2 import BitWord, LayeredCode, LinearCode
from .lexer import Bits, CodeFileLexer, Error, Keyword, Name, Number, lex

__all__ = ["CodeFile", "load", "parse"]


@attrs(frozen=True, auto_attribs=True)
class CodeFile:
    """Parsed contents of a code file.

    Attributes:
        block_length: n.
        levels: L.
        mode: ``list`` (every codeword listed) or ``gen`` (generator rows).
        words: the bitstrings, each of length n·L.
        lines: the 1-based line number of each word.
    """

    block_length: int
    levels: int
    mode: str
    words: Tuple[BitWord, ...] = attr.ib(converter=tuple)
    lines: Tuple[int, ...] = attr.ib(converter=tuple, eq=False)

    def to_layered_code(self) -> LayeredCode:
        """The layered code the file describes.

        Raises:
            CodeFileError: if a ``list`` mode file is not a linear code.
        """
        length = self.block_length * self.levels
        if self.mode == "gen":
            code = LinearCode(length, self.words)
            return LayeredCode(code, self.block_length, self.levels)
        try:
            code = LinearCode.from_words(self.words, length)
        except NotLinearError as e:
            raise CodeFileError(str(e), self._line_of(e.word)) from e
        return LayeredCode(code, self.block_length, self.levels)

    def _line_of(self, word: Optional[BitWord]) -> Optional[int]:
        # The second listing of a repeated word, otherwise none
        matches = [line for w, line in zip(self.words, self.lines) if w == word]
        return matches[1] if len(matches) > 1 else None


def _header_value(key: str, value: str, number: int) -> Union[int, str]:
    if key == "mode":
        return value
    count = int(value)
    if count < 1:
        raise CodeFileError(f"{key} must be positive", number)
    return count


def parse(text: str) -> CodeFile:
    """Parse code file text.

    Raises:
        CodeFileError: with the line number of the first problem.
    """
    lexer = CodeFileLexer()
    header: Dict[str, Union[int, str]] = {}
    words: List[BitWord] = []
    lines: List[int] = []
    for number, line in enumerate(text.splitlines(), start=1):
        key = None
        for token_type, value in lex(line, lexer):
            if token_type in Error:
                raise CodeFileError(f"unexpected {value!r}", number)
            if token_type in Keyword:
                key = value
                if key in header:
                    raise CodeFileError(f"{key} is given twice", number)
            elif token_type in Number.Integer or token_type in Name.Constant:
                assert key is not None
                if (key == "mode") != (token_type in Name.Constant):
                    raise CodeFileError(f"bad value {value!r} for {key}", number)
                header[key] = _header_value(key, value, number)
                key = None
            elif token_type in Bits:
                missing = [k for k in CodeFileLexer.HEADER_KEYS if k not in header]
                if missing:
                    raise CodeFileError(
                        f"codeword before the {', '.join(missing)} header", number
                    )
                length = int(header["n"]) * int(header["L"])
                if len(value) != length:
                    raise CodeFileError(
                        f"codeword {value} has length {len(value)}, expected "
                        f"n·L = {length}",
                        number,
                    )
                words.append(BitWord(value))
                lines.append(number)
        if key is not None:
            raise CodeFileError(f"missing value for {key}", number)
    missing = [k for k in CodeFileLexer.HEADER_KEYS if k not in header]
    if missing:
        raise CodeFileError(f"missing {', '.join(missing)} header")
    if header["mode"] == "list" and not words:
        raise CodeFileError("list mode needs at least the zero word")
    return CodeFile(
        int(header["n"]), int(header["L"]), str(header["mode"]), words, lines
    )


def load(path: Union[str, Path]) -> CodeFile:
    """Read and parse a UTF-8 code file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CodeFileError(f"cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise CodeFileError(f"{path} is not UTF-8") from e
    return parse(text)
