"""A small expression parser shared by the scalar and algebra readers.

Grammar (juxtaposition is multiplication, ``^`` binds tightest)::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := power (("*"|"/")? power)*
    power  := atom ("^" ["+"|"-"] INT)?
    atom   := INT | NAME | "(" expr ")"

Names are resolved through a symbol table, integers through a coercion
callable, and every operator is delegated to the values themselves, so the
same parser evaluates scalars, U_q(sl2) elements, and so on.  Products are
evaluated left to right, which matters for noncommutative values.
"""

from __future__ import annotations

import re
from typing import Any, Callable

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\S))")


def tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r} in {text!r}")
            tokens.append(("op", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, symbols, coerce):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.symbols = symbols
        self.coerce = coerce

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def _starts_atom(self):
        kind, val = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self):
        value = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                try:
                    value = value * rhs if val == "*" else value / rhs
                except (TypeError, ValueError) as exc:
                    raise ParseError(str(exc)) from exc
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            try:
                return base ** (sign * int(val))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc)) from exc
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.coerce(int(val))
        if kind == "name":
            if val not in self.symbols:
                raise ParseError(f"unknown symbol {val!r}")
            return self.symbols[val]
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def evaluate(text: str, symbols: dict[str, Any], coerce: Callable[[int], Any]) -> Any:
    """Parse ``text`` and evaluate it with the given symbols."""
    return _Parser(text, symbols, coerce).parse()
