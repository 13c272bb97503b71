"""Syntax model for the Java subset we analyze.

Expressions keep only the shapes that matter for message analysis: string
and char literals (decoded), numbers, identifiers, field chains, calls,
``+`` concatenations.  Everything else is preserved as :class:`OtherExpr`
with its raw source slice.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class SourceFile:
    """A parsed-input file with a byte-offset -> (line, col) index."""

    path: str
    content: str
    line_starts: tuple[int, ...]

    @classmethod
    def from_text(cls, text: str, path: str = "<memory>") -> "SourceFile":
        if text.startswith("﻿"):
            text = text[1:]
        starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                starts.append(i + 1)
        return cls(path=path, content=text, line_starts=tuple(starts))

    @classmethod
    def from_path(cls, path: str | Path) -> "SourceFile":
        raw = Path(path).read_bytes()
        text = raw.decode("utf-8-sig", errors="replace")
        return cls.from_text(text, path=str(path))

    def position(self, offset: int) -> tuple[int, int]:
        """Map an offset to a 1-based (line, column) pair."""
        if offset < 0:
            offset = 0
        if offset > len(self.content):
            offset = len(self.content)
        idx = bisect.bisect_right(self.line_starts, offset) - 1
        return idx + 1, offset - self.line_starts[idx] + 1


@dataclass(frozen=True)
class Expr:
    raw: str
    line: int
    col: int


@dataclass(frozen=True)
class StringLit(Expr):
    value: str


@dataclass(frozen=True)
class CharLit(Expr):
    value: str


@dataclass(frozen=True)
class NumberLit(Expr):
    text: str


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True)
class NullLit(Expr):
    pass


@dataclass(frozen=True)
class Ident(Expr):
    name: str


@dataclass(frozen=True)
class FieldRef(Expr):
    chain: tuple[str, ...]


@dataclass(frozen=True)
class Call(Expr):
    callee_parts: tuple[str, ...]
    args: tuple[Expr, ...]

    @property
    def callee(self) -> str:
        return ".".join(self.callee_parts)

    @property
    def name(self) -> str:
        return self.callee_parts[-1]

    @property
    def qualifier(self) -> str:
        return ".".join(self.callee_parts[:-1])


@dataclass(frozen=True)
class Concat(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class OtherExpr(Expr):
    pass


@dataclass(frozen=True)
class MethodDecl:
    name: str
    annotations: tuple[str, ...]
    body_calls: tuple[Call, ...]
    line: int
    col: int


@dataclass(frozen=True)
class ClassDecl:
    name: str
    kind: str  # class | interface | enum | record
    annotations: tuple[str, ...]
    imports: tuple[str, ...]
    extends: str | None
    methods: tuple[MethodDecl, ...]
    line: int
    col: int


@dataclass(frozen=True)
class Diagnostic:
    """A recoverable lex/parse problem tied to a source position."""

    message: str
    line: int
    col: int
    kind: str = "parse"  # lex | parse


@dataclass
class ParseResult:
    classes: list[ClassDecl] = field(default_factory=list)
    errors: list[Diagnostic] = field(default_factory=list)

    @property
    def has_warnings(self) -> bool:
        return bool(self.errors)
