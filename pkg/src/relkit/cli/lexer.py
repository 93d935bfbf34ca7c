"""Tokenizer shared by the term language and the relation file format."""

from __future__ import annotations

import json
import re
from bisect import bisect_right
from dataclasses import dataclass

from ..errors import ParseError


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "string", "op", "end"
    text: str
    start: int
    end: int


class Source:
    """Input text plus offset to line/column conversion."""

    def __init__(self, text: str):
        self.text = text
        self._starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def position(self, offset: int) -> tuple[int, int]:
        line = bisect_right(self._starts, offset)
        return line, offset - self._starts[line - 1] + 1

    def error(self, cls, message: str, offset: int):
        line, col = self.position(offset)
        return cls(message, line, col)


_STRING = re.compile(r'"(?:[^"\\\n]|\\.)*"')


def tokenize(src: Source, word: re.Pattern, ops: tuple[str, ...]) -> list[Token]:
    """Split ``src`` into tokens.

    ``word`` matches bare names, ``ops`` lists operator spellings (longest
    first where they share a prefix). ``#`` starts a comment.
    """
    text, out, i = src.text, [], 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "#":
            nl = text.find("\n", i)
            i = len(text) if nl < 0 else nl
            continue
        if c == '"':
            m = _STRING.match(text, i)
            if not m:
                raise src.error(ParseError, "unterminated string", i)
            try:
                value = json.loads(m.group())
            except json.JSONDecodeError:
                raise src.error(ParseError, "bad escape in string", i) from None
            out.append(Token("string", value, i, m.end()))
            i = m.end()
            continue
        op = next((o for o in ops if text.startswith(o, i)), None)
        if op is not None:
            out.append(Token("op", op, i, i + len(op)))
            i += len(op)
            continue
        m = word.match(text, i)
        if m and m.end() > i:
            out.append(Token("name", m.group(), i, m.end()))
            i = m.end()
            continue
        raise src.error(ParseError, f"unexpected character {c!r}", i)
    out.append(Token("end", "", len(text), len(text)))
    return out


class TokenStream:
    def __init__(self, src: Source, tokens: list[Token]):
        self.src = src
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def at(self, text: str, kind: str = "op") -> bool:
        tok = self.peek
        return tok.kind == kind and tok.text == text

    def accept(self, text: str, kind: str = "op") -> Token | None:
        return self.next() if self.at(text, kind) else None

    def expect(self, text: str, kind: str = "op") -> Token:
        if not self.at(text, kind):
            raise self.fail(f"expected {text!r}")
        return self.next()

    def expect_kind(self, *kinds: str, what: str) -> Token:
        if self.peek.kind not in kinds:
            raise self.fail(f"expected {what}")
        return self.next()

    def fail(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return self.src.error(ParseError, f"{message}, found {found}", tok.start)
