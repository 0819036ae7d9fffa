"""Recursive-descent parser for the expression grammar.

The grammar, with left recursion removed::

    S   <- E1 Rs
    Rs  <- ("+" | "-") E1 Rs | <empty>
    E1  <- E2 Re1
    Re1 <- ("*" | "/") E2 Re1 | <empty>
    E2  <- E3 Re2
    Re2 <- "^" E3 Re2 | <empty>
    E3  <- ("sin" | "cos" | "tan" | "log" | "exp" | "-") T | T
    T   <- number | identifier | "(" S ")"

``Rs`` and ``Re1`` are loops that fold to the left; ``Re2`` recurses, so
``^`` is right-associative. A prefix operator only takes a ``T``, which makes
``-x^2`` mean ``(-x)^2``.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import ParseError
from .lexer import CONSTANTS, Token, TokenKind, tokenize
from .nodes import Binary, Const, Expr, Num, Unary, Var

_ADDITIVE = {TokenKind.PLUS: "add", TokenKind.MINUS: "sub"}
_MULTIPLICATIVE = {TokenKind.STAR: "mul", TokenKind.SLASH: "div"}
_PRIMARY = "number, identifier or '('"


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        if not tokens or tokens[-1].kind is not TokenKind.END:
            raise ValueError("token sequence must end with END")
        self.tokens = tokens
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str) -> ParseError:
        tok = self.current
        found = "end of input" if tok.kind is TokenKind.END else repr(tok.lexeme)
        return ParseError(f"expected {expected}, found {found}", tok.position, expected)

    def parse(self) -> Expr:
        if self.current.kind in (TokenKind.END, TokenKind.SEMICOLON):
            raise ParseError("empty expression", self.current.position, _PRIMARY)
        expr = self.sum()
        if self.current.kind is TokenKind.SEMICOLON:
            self.advance()
        if self.current.kind is not TokenKind.END:
            if self.current.kind is TokenKind.RPAREN:
                raise ParseError("unmatched ')'", self.current.position, "end of input")
            raise self.fail("operator or end of input")
        return expr

    # S <- E1 Rs
    def sum(self) -> Expr:
        left = self.product()
        while self.current.kind in _ADDITIVE:
            op = _ADDITIVE[self.advance().kind]
            left = Binary(op, left, self.product())
        return left

    # E1 <- E2 Re1
    def product(self) -> Expr:
        left = self.power()
        while self.current.kind in _MULTIPLICATIVE:
            op = _MULTIPLICATIVE[self.advance().kind]
            left = Binary(op, left, self.power())
        return left

    # E2 <- E3 Re2
    def power(self) -> Expr:
        base = self.prefix()
        if self.current.kind is TokenKind.CARET:
            self.advance()
            return Binary("pow", base, self.power())
        return base

    # E3
    def prefix(self) -> Expr:
        tok = self.current
        if tok.kind is TokenKind.MINUS:
            self.advance()
            return Unary("neg", self.term())
        if tok.kind is TokenKind.FUNC:
            self.advance()
            return Unary(tok.lexeme, self.term())
        return self.term()

    # T
    def term(self) -> Expr:
        tok = self.current
        if tok.kind is TokenKind.NUMBER:
            self.advance()
            value = float(tok.lexeme)
            if not math.isfinite(value):
                raise ParseError("number out of range", tok.position, "finite number")
            return Num(value)
        if tok.kind is TokenKind.IDENT:
            self.advance()
            return Const(tok.lexeme) if tok.lexeme in CONSTANTS else Var(tok.lexeme)
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            inner = self.sum()
            if self.current.kind is not TokenKind.RPAREN:
                raise self.fail("')'")
            self.advance()
            return inner
        raise self.fail(_PRIMARY)


def parse(tokens: Sequence[Token]) -> Expr:
    """Parse a token sequence (ending in END) into an expression tree.

    A single semicolon just before END is accepted and ignored.
    """
    return _Parser(tokens).parse()


def parse_function(source: str) -> Expr:
    """Tokenize and parse ``source``, e.g. ``"(x-y)/2;"``."""
    return parse(tokenize(source))
