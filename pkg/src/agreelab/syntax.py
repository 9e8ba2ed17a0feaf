"""Surface syntax shared by feature terms and categories.

Grammar, loosest binding first::

    expr    ::= disj ( ('/' | '\\') disj )*      left associative
    disj    ::= conj ( '|' conj )*
    conj    ::= primary ( '&' primary )*
    primary ::= ATOM | '(' expr ')'

``∧`` and ``∨`` are accepted as spellings of ``&`` and ``|``.  The parser
returns a raw tree of tuples; :mod:`agreelab.features` and
:mod:`agreelab.lcg.categories` turn it into typed values.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Union

ATOM_RE = re.compile(r"[a-z0-9_]+")

_TOKEN_RE = re.compile(r"\s*(?:(?P<atom>[a-z0-9_]+)|(?P<op>[&|/\\()∧∨])|(?P<bad>\S))")
_OP_ALIASES = {"∧": "&", "∨": "|"}


class ParseError(ValueError):
    """Malformed term or category text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class Token(NamedTuple):
    kind: str  # "atom", an operator character, or "end"
    value: str
    pos: int


# ("atom", name, pos) | (op, left, right, pos) with op in "&|/\\"
Raw = Union[tuple]


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", text, m.start("bad"))
        if m.group("atom") is not None:
            tokens.append(Token("atom", m.group("atom"), m.start("atom")))
        else:
            op = _OP_ALIASES.get(m.group("op"), m.group("op"))
            tokens.append(Token(op, op, m.start("op")))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek
        return ParseError(message, self.text, tok.pos)

    def parse(self) -> Raw:
        if self.peek.kind == "end":
            raise self.error("empty input")
        node = self.expr()
        if self.peek.kind != "end":
            raise self.error(f"unexpected {self.peek.value!r}")
        return node

    def expr(self) -> Raw:
        node = self.disj()
        while self.peek.kind in ("/", "\\"):
            op = self.advance()
            node = (op.kind, node, self.disj(), op.pos)
        return node

    def disj(self) -> Raw:
        node = self.conj()
        while self.peek.kind == "|":
            op = self.advance()
            node = ("|", node, self.conj(), op.pos)
        return node

    def conj(self) -> Raw:
        node = self.primary()
        while self.peek.kind == "&":
            op = self.advance()
            node = ("&", node, self.primary(), op.pos)
        return node

    def primary(self) -> Raw:
        tok = self.advance()
        if tok.kind == "atom":
            return ("atom", tok.value, tok.pos)
        if tok.kind == "(":
            node = self.expr()
            if self.peek.kind != ")":
                raise self.error("expected ')'")
            self.advance()
            return node
        if tok.kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.value!r}", tok)


def parse_raw(text: str) -> Raw:
    return _Parser(text).parse()
