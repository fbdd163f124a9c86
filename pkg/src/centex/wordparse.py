"""Recursive-descent parser and printer for the word grammar.

Grammar (whitespace separates juxtaposed terms, ``^`` binds to the
immediately preceding atom only)::

    word  := term+
    term  := atom ('^' INT)?
    atom  := '1' | NAME | '(' word ')'
           | 'comm' '(' word ',' word ')'   # w1^-1 w2^-1 w1 w2
           | 'conj' '(' word ',' word ')'   # z^-1 w z
    NAME  := [a-z][a-z0-9_]*   (comm and conj are reserved)

``parse_word``/``print_word`` round-trip to an identical syntax tree;
``flatten`` expands a tree to a raw letter sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import WordSyntaxError
from .words import Letters, flat_merge, invert_letters

RESERVED = ("comm", "conj")


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Seq:
    parts: tuple["Node", ...]


@dataclass(frozen=True)
class Comm:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Conj:
    target: "Node"
    by: "Node"


Node = Union[One, Name, Power, Seq, Comm, Conj]

_NAME_START = "abcdefghijklmnopqrstuvwxyz"
_NAME_CONT = _NAME_START + "0123456789_"


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, object, int, int]] = []
        self._lex()

    def _location(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        last_nl = self.text.rfind("\n", 0, pos)
        column = pos - last_nl
        return line, column

    def _lex(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            line, col = self._location(i)
            if ch in "(),^":
                kind = {"(": "lparen", ")": "rparen", ",": "comma", "^": "caret"}[ch]
                self.tokens.append((kind, ch, line, col))
                i += 1
            elif ch.isdigit() or ch == "-":
                j = i + 1 if ch == "-" else i
                if j >= len(text) or not text[j].isdigit():
                    raise WordSyntaxError(f"unexpected {ch!r}", line, col)
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", int(text[i:j]), line, col))
                i = j
            elif ch in _NAME_START:
                j = i
                while j < len(text) and text[j] in _NAME_CONT:
                    j += 1
                self.tokens.append(("name", text[i:j], line, col))
                i = j
            else:
                raise WordSyntaxError(f"unexpected character {ch!r}", line, col)
        line, col = self._location(len(text))
        self.tokens.append(("eof", None, line, col))


class _Parser:
    def __init__(self, text: str):
        self.tokens = _Lexer(text).tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise WordSyntaxError(
                f"expected {kind}, found {tok[1]!r}" if tok[0] != "eof" else f"expected {kind}, found end of input",
                tok[2],
                tok[3],
            )
        return tok

    def parse(self) -> Node:
        word = self.parse_word()
        tok = self.peek()
        if tok[0] != "eof":
            raise WordSyntaxError(f"unexpected {tok[1]!r}", tok[2], tok[3])
        return word

    def parse_word(self) -> Node:
        parts = [self.parse_term()]
        while self.peek()[0] in ("name", "lparen", "int"):
            parts.append(self.parse_term())
        if len(parts) == 1:
            return parts[0]
        return Seq(tuple(parts))

    def parse_term(self) -> Node:
        atom = self.parse_atom()
        if self.peek()[0] == "caret":
            self.advance()
            tok = self.peek()
            if tok[0] != "int":
                raise WordSyntaxError("expected integer exponent after '^'", tok[2], tok[3])
            self.advance()
            return Power(atom, tok[1])
        return atom

    def parse_atom(self) -> Node:
        tok = self.advance()
        kind, value, line, col = tok
        if kind == "int":
            if value == 1:
                return One()
            raise WordSyntaxError(f"unexpected number {value}", line, col)
        if kind == "lparen":
            inner = self.parse_word()
            self.expect("rparen")
            return inner
        if kind == "name":
            if value in RESERVED:
                self.expect("lparen")
                first = self.parse_word()
                self.expect("comma")
                second = self.parse_word()
                self.expect("rparen")
                return Comm(first, second) if value == "comm" else Conj(first, second)
            return Name(value)
        if kind == "eof":
            raise WordSyntaxError("unexpected end of input", line, col)
        raise WordSyntaxError(f"unexpected {value!r}", line, col)


def parse_word(text: str) -> Node:
    """Parse a word expression; raises WordSyntaxError with line/column."""
    return _Parser(text).parse()


def _needs_parens(node: Node) -> bool:
    return isinstance(node, (Seq, Power, One))


def print_word(node: Node) -> str:
    if isinstance(node, One):
        return "1"
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Power):
        base = print_word(node.base)
        if _needs_parens(node.base):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Seq):
        return " ".join(print_word(p) for p in node.parts)
    if isinstance(node, Comm):
        return f"comm({print_word(node.left)}, {print_word(node.right)})"
    if isinstance(node, Conj):
        return f"conj({print_word(node.target)}, {print_word(node.by)})"
    raise TypeError(f"not a word node: {node!r}")


def flatten(node: Node) -> Letters:
    """Expand a syntax tree into a merged raw letter sequence."""
    if isinstance(node, One):
        return ()
    if isinstance(node, Name):
        return ((node.name, 1),)
    if isinstance(node, Power):
        inner = flatten(node.base)
        if node.exponent == 0:
            return ()
        if len(inner) == 1:
            gen, exp = inner[0]
            return ((gen, exp * node.exponent),)
        if node.exponent < 0:
            inner = invert_letters(inner)
        return flat_merge(inner * abs(node.exponent))
    if isinstance(node, Seq):
        out: tuple = ()
        for part in node.parts:
            out = out + flatten(part)
        return flat_merge(out)
    if isinstance(node, Comm):
        left = flatten(node.left)
        right = flatten(node.right)
        return flat_merge(
            invert_letters(left) + invert_letters(right) + left + right
        )
    if isinstance(node, Conj):
        target = flatten(node.target)
        by = flatten(node.by)
        return flat_merge(invert_letters(by) + target + by)
    raise TypeError(f"not a word node: {node!r}")


def parse_letters(text: str) -> Letters:
    return flatten(parse_word(text))
