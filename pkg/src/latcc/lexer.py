"""Pygments lexer for code files, and the token types used for report output."""
from typing import Any, List, Tuple

from pygments.lexer import RegexLexer, bygroups, default
from pygments.token import (
    Comment,
    Error,
    Generic,
    Keyword,
    Name,
    Number,
    Operator,
    Text,
    Whitespace,
)

__all__ = ["CodeFileLexer", "lex"]

# Tokens
UI = Generic.UI
Verdict = Generic.Verdict
Bits = Number.Bin
__all__ += [
    "Bits",
    "Comment",
    "Error",
    "Generic",
    "Keyword",
    "Name",
    "Number",
    "Operator",
    "Text",
    "UI",
    "Verdict",
    "Whitespace",
]


class CodeFileLexer(RegexLexer):
    """Lexer for a line (or whole text) of a code file.

    A code file has ``#`` comments, ``n=<int> L=<int>`` and ``mode=list|gen``
    headers, then one bitstring per line.
    """

    name = "LatccCode"
    aliases = ["latcc"]
    filenames = ["*.code"]

    HEADER_KEYS = ("n", "L", "mode")

    def __init__(self, ensurenl=False, **options):
        super().__init__(ensurenl=ensurenl, **options)

    tokens = {
        "root": [
            (r"\s+", Whitespace),
            (r"#.*", Comment.Single),
            (
                r"(n|L|mode)(\s*)(=)(\s*)",
                bygroups(Keyword, Whitespace, Operator, Whitespace),
                "value",
            ),
            (r"[01]+(?=\s|#|$)", Bits),
            (r"[^\s#]+", Error),
        ],
        "value": [
            (r"\d+(?=\s|#|$)", Number.Integer, "#pop"),
            (r"(list|gen)(?=\s|#|$)", Name.Constant, "#pop"),
            (r"[^\s#]+", Error, "#pop"),
            default("#pop"),
        ],
    }


def lex(text: str, lexer: CodeFileLexer = None) -> List[Tuple[Any, str]]:
    """Lex code file text.

    Returns: list of (tokentype, value)
    """
    if not lexer:
        lexer = CodeFileLexer()
    return list(lexer.get_tokens(text))
