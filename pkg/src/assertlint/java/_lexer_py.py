"""Pure-Python Java lexer.

Tokenizes a Java-subset: identifiers/keywords (one kind), numeric literals,
string/char literals with escape decoding, text blocks, operators and
punctuation.  Comments and whitespace are dropped.  The lexer never raises
on malformed input: unterminated literals/comments and stray characters
produce ERROR tokens plus recorded :class:`LexError` entries, and lexing
resumes at the next line.

Unicode escapes are decoded inside literals only; the full-Java rule of
translating ``\\uXXXX`` anywhere in the file is out of scope.

The compiled twin in ``_lexer_c.pyx`` must stay behaviourally identical;
``tests/test_lexer_equivalence.py`` enforces that.
"""

from __future__ import annotations

from assertlint.java.tokens import (
    CHAR,
    ERROR,
    IDENT,
    MULTI_OPS,
    NUMBER,
    OP,
    STRING,
    LexError,
)

_SINGLE_OP_SET = frozenset("+-*/%=<>!&|^~?:;,.()[]{}@")
_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")
_SIMPLE_ESCAPES = {
    "n": "\n",
    "t": "\t",
    "b": "\b",
    "r": "\r",
    "f": "\f",
    "s": " ",
    "'": "'",
    '"': '"',
    "\\": "\\",
}


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_" or ch == "$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch == "_" or ch == "$"


def _decode_escape(s: str, i: int, n: int) -> tuple[str, int]:
    """Decode the escape whose backslash sits at ``i``; returns (text, next).

    Unknown escapes decode to the escaped character itself (lenient).
    """
    j = i + 1
    if j >= n:
        return "\\", j
    c = s[j]
    if c in _SIMPLE_ESCAPES:
        return _SIMPLE_ESCAPES[c], j + 1
    if c == "u":
        # JLS allows any number of 'u's before the four hex digits.
        k = j
        while k < n and s[k] == "u":
            k += 1
        if k + 4 <= n and all(s[k + m] in _HEX_DIGITS for m in range(4)):
            return chr(int(s[k : k + 4], 16)), k + 4
        return c, j + 1
    if "0" <= c <= "7":
        # Octal escape: up to 3 digits, leading 0-3 allows 3.
        limit = 3 if c <= "3" else 2
        k = j
        while k < n and k - j < limit and "0" <= s[k] <= "7":
            k += 1
        return chr(int(s[j:k], 8)), k
    return c, j + 1


def tokenize(text: str) -> tuple[list, list]:
    """Lex ``text`` into ``(tokens, errors)``; see ``tokens.py`` for shapes."""
    tokens: list = []
    errors: list = []
    s = text
    n = len(s)
    i = 0
    line = 1
    line_start = 0

    while i < n:
        c = s[i]
        if c == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if c == " " or c == "\t" or c == "\r" or c == "\f":
            i += 1
            continue

        start = i
        col = i - line_start + 1

        # Comments
        if c == "/" and i + 1 < n:
            c2 = s[i + 1]
            if c2 == "/":
                i += 2
                while i < n and s[i] != "\n":
                    i += 1
                continue
            if c2 == "*":
                i += 2
                closed = False
                while i < n:
                    ch = s[i]
                    if ch == "\n":
                        line += 1
                        i += 1
                        line_start = i
                        continue
                    if ch == "*" and i + 1 < n and s[i + 1] == "/":
                        i += 2
                        closed = True
                        break
                    i += 1
                if not closed:
                    errors.append(LexError("unterminated block comment", line, col))
                continue

        # String literals and text blocks
        if c == '"':
            if i + 2 < n and s[i + 1] == '"' and s[i + 2] == '"':
                i += 3
                parts: list[str] = []
                closed = False
                while i < n:
                    ch = s[i]
                    if ch == "\\":
                        piece, i = _decode_escape(s, i, n)
                        parts.append(piece)
                        continue
                    if ch == '"' and i + 2 < n and s[i + 1] == '"' and s[i + 2] == '"':
                        i += 3
                        closed = True
                        break
                    if ch == "\n":
                        line += 1
                        i += 1
                        line_start = i
                        parts.append(ch)
                        continue
                    parts.append(ch)
                    i += 1
                value = "".join(parts)
                if value.startswith("\n"):
                    value = value[1:]
                if not closed:
                    errors.append(LexError("unterminated text block", line, col))
                    tokens.append((ERROR, s[start:i], line, col, start, i))
                else:
                    tokens.append((STRING, value, line, col, start, i))
                continue
            i += 1
            parts = []
            terminated = False
            while i < n:
                ch = s[i]
                if ch == '"':
                    i += 1
                    terminated = True
                    break
                if ch == "\n":
                    break
                if ch == "\\":
                    piece, i = _decode_escape(s, i, n)
                    parts.append(piece)
                    continue
                parts.append(ch)
                i += 1
            if terminated:
                tokens.append((STRING, "".join(parts), line, col, start, i))
            else:
                errors.append(LexError("unterminated string literal", line, col))
                tokens.append((ERROR, s[start:i], line, col, start, i))
            continue

        # Char literals
        if c == "'":
            i += 1
            parts = []
            terminated = False
            while i < n:
                ch = s[i]
                if ch == "'":
                    i += 1
                    terminated = True
                    break
                if ch == "\n":
                    break
                if ch == "\\":
                    piece, i = _decode_escape(s, i, n)
                    parts.append(piece)
                    continue
                parts.append(ch)
                i += 1
            if terminated:
                tokens.append((CHAR, "".join(parts), line, col, start, i))
            else:
                errors.append(LexError("unterminated char literal", line, col))
                tokens.append((ERROR, s[start:i], line, col, start, i))
            continue

        # Numeric literals
        if c.isdigit() or (c == "." and i + 1 < n and s[i + 1].isdigit()):
            i = _scan_number(s, i, n)
            tokens.append((NUMBER, s[start:i], line, col, start, i))
            continue

        # Identifiers / keywords
        if _is_ident_start(c):
            i += 1
            while i < n and _is_ident_part(s[i]):
                i += 1
            tokens.append((IDENT, s[start:i], line, col, start, i))
            continue

        # Operators and punctuation, longest match first
        matched = False
        for op in MULTI_OPS:
            if s.startswith(op, i):
                i += len(op)
                tokens.append((OP, op, line, col, start, i))
                matched = True
                break
        if matched:
            continue
        if c in _SINGLE_OP_SET:
            i += 1
            tokens.append((OP, c, line, col, start, i))
            continue

        errors.append(LexError(f"unexpected character {c!r}", line, col))
        tokens.append((ERROR, c, line, col, start, i + 1))
        i += 1

    return tokens, errors


def _scan_number(s: str, i: int, n: int) -> int:
    if s[i] == "0" and i + 1 < n and (s[i + 1] == "x" or s[i + 1] == "X"):
        i += 2
        while i < n and (s[i] in _HEX_DIGITS or s[i] == "_"):
            i += 1
        if i < n and (s[i] == "l" or s[i] == "L"):
            i += 1
        return i
    if s[i] == "0" and i + 1 < n and (s[i + 1] == "b" or s[i + 1] == "B"):
        i += 2
        while i < n and (s[i] == "0" or s[i] == "1" or s[i] == "_"):
            i += 1
        if i < n and (s[i] == "l" or s[i] == "L"):
            i += 1
        return i
    while i < n and (s[i].isdigit() or s[i] == "_"):
        i += 1
    if i < n and s[i] == "." and i + 1 < n and s[i + 1].isdigit():
        i += 1
        while i < n and (s[i].isdigit() or s[i] == "_"):
            i += 1
    if i < n and (s[i] == "e" or s[i] == "E"):
        j = i + 1
        if j < n and (s[j] == "+" or s[j] == "-"):
            j += 1
        if j < n and s[j].isdigit():
            i = j
            while i < n and s[i].isdigit():
                i += 1
    if i < n and s[i] in "lLfFdD":
        i += 1
    return i
