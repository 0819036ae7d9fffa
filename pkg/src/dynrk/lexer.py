"""Scanner for derivative and solution expressions."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import LexError

FUNCTIONS = frozenset({"sin", "cos", "tan", "log", "exp"})
CONSTANTS = frozenset({"e", "pi"})


class TokenKind(enum.Enum):
    NUMBER = "number"
    IDENT = "identifier"
    FUNC = "function"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    SEMICOLON = "';'"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int


_PUNCT = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ";": TokenKind.SEMICOLON,
}

_NUMBER = re.compile(r"[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?")
_WORD = re.compile(r"[A-Za-z_]+")


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        c = source[pos]
        if c.isspace():
            pos += 1
            continue
        if c in _PUNCT:
            tokens.append(Token(_PUNCT[c], c, pos))
            pos += 1
            continue
        if "0" <= c <= "9":
            m = _NUMBER.match(source, pos)
            end = m.end()
            # "1." or "1.2.3": a dot that did not start a fractional part
            if end < n and source[end] == ".":
                raise LexError("malformed number", pos, expected="number")
            tokens.append(Token(TokenKind.NUMBER, m.group(), pos))
            pos = end
            continue
        m = _WORD.match(source, pos)
        if m:
            word = m.group()
            if word in FUNCTIONS:
                kind = TokenKind.FUNC
            elif word in CONSTANTS or (len(word) == 1 and "a" <= word <= "z"):
                kind = TokenKind.IDENT
            else:
                raise LexError(f"unknown name {word!r}", pos, expected="identifier")
            tokens.append(Token(kind, word, pos))
            pos = m.end()
            continue
        raise LexError(f"unexpected character {c!r}", pos)
    tokens.append(Token(TokenKind.END, "", n))
    return tokens
