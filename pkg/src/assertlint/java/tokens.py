"""Token-level definitions shared by the pure-Python and compiled lexers.

A token is a plain tuple ``(kind, value, line, col, start, end)`` so that
the two lexer backends produce results that compare equal byte for byte:

* ``kind``  -- one of the integer constants below
* ``value`` -- decoded text for string/char literals, the lexeme otherwise
* ``line``, ``col`` -- 1-based position of the token start
* ``start``, ``end`` -- offsets into the source text (``end`` exclusive)
"""

from __future__ import annotations

from dataclasses import dataclass

IDENT = 1
NUMBER = 2
STRING = 3
CHAR = 4
OP = 5
ERROR = 6

KIND_NAMES = {
    IDENT: "ident",
    NUMBER: "number",
    STRING: "string",
    CHAR: "char",
    OP: "op",
    ERROR: "error",
}

Token = tuple  # (kind, value, line, col, start, end)


@dataclass(frozen=True)
class LexError:
    """A recoverable lexical problem (unterminated literal, stray byte)."""

    message: str
    line: int
    col: int


# Multi-character operators, longest first; single chars are matched directly.
MULTI_OPS = (
    ">>>=",
    ">>>",
    "<<=",
    ">>=",
    "...",
    "->",
    "::",
    "==",
    "!=",
    "<=",
    ">=",
    "&&",
    "||",
    "++",
    "--",
    "+=",
    "-=",
    "*=",
    "/=",
    "%=",
    "&=",
    "|=",
    "^=",
    "<<",
    ">>",
)

SINGLE_OPS = "+-*/%=<>!&|^~?:;,.()[]{}@"
