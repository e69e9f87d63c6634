"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := var | rational | '(' expr ')' | '-' factor | 'sqrt' '(' expr ')'
    rational := int ('/' uint)?

``sqrt`` is only accepted when the caller enables it (parameter families).
Parsing produces a small tuple AST which a backend folds into a value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Collection, List, Optional, Tuple

from .polyring import Poly, X, Y

__all__ = ["ParseError", "parse_ast", "parse_polynomial", "evaluate_ast"]


class ParseError(ValueError):
    """Raised on malformed input; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'end'
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(Token("int", num, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", start, text)
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, allowed_vars: Collection[str], allow_sqrt: bool):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.allowed = set(allowed_vars)
        self.allow_sqrt = allow_sqrt

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise ParseError(message, tok.pos, self.text)

    def eat(self, kind: str, value: Optional[str] = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value or kind
            got = tok.value or "end of input"
            self.fail(f"expected {want!r}, found {got!r}")
        self.i += 1
        return tok

    def is_op(self, value: str) -> bool:
        return self.tok.kind == "op" and self.tok.value == value

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.value!r}")
        return node

    def expr(self):
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.eat("op").value
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.is_op("*"):
            self.eat("op")
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.is_op("^"):
            self.eat("op")
            tok = self.tok
            if tok.kind != "int":
                self.fail("exponent must be a non-negative integer literal")
            self.i += 1
            node = ("pow", node, int(tok.value))
        return node

    def base(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            value = Fraction(int(tok.value))
            if self.is_op("/"):
                self.eat("op")
                den = self.tok
                if den.kind != "int":
                    self.fail("denominator of a rational literal must be an unsigned integer")
                self.i += 1
                if int(den.value) == 0:
                    self.fail("zero denominator", den)
                value = Fraction(int(tok.value), int(den.value))
            return ("num", value)
        if tok.kind == "name":
            self.i += 1
            if tok.value == "sqrt" and self.is_op("("):
                if not self.allow_sqrt:
                    self.fail("sqrt(...) is only allowed in parameter families", tok)
                self.eat("op", "(")
                inner = self.expr()
                self.eat("op", ")")
                return ("sqrt", inner)
            if tok.value not in self.allowed:
                self.fail(f"unknown variable {tok.value!r}", tok)
            return ("var", tok.value)
        if self.is_op("("):
            self.eat("op")
            node = self.expr()
            self.eat("op", ")")
            return node
        if self.is_op("-"):
            self.eat("op")
            return ("neg", self.factor())
        self.fail(f"unexpected {tok.value or 'end of input'!r}")


def parse_ast(text: str, allowed_vars: Collection[str] = ("x", "y"), allow_sqrt: bool = False):
    return _Parser(text, allowed_vars, allow_sqrt).parse()


def evaluate_ast(node, var: Callable[[str], object], const: Callable[[Fraction], object],
                 sqrt: Optional[Callable[[object], object]] = None):
    """Fold an AST into a value of any ring supporting +, -, *, ** and unary -."""
    kind = node[0]
    if kind == "num":
        return const(node[1])
    if kind == "var":
        return var(node[1])
    if kind == "neg":
        return -evaluate_ast(node[1], var, const, sqrt)
    if kind == "pow":
        return evaluate_ast(node[1], var, const, sqrt) ** node[2]
    if kind == "sqrt":
        if sqrt is None:
            raise ValueError("sqrt not supported by this backend")
        return sqrt(evaluate_ast(node[1], var, const, sqrt))
    lhs = evaluate_ast(node[1], var, const, sqrt)
    rhs = evaluate_ast(node[2], var, const, sqrt)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    raise ValueError(f"unknown node {kind!r}")


_VARS = {"x": X, "y": Y}


def parse_polynomial(text: str, allowed_vars: Collection[str] = ("x", "y")) -> Poly:
    """Parse ``text`` into an expanded :class:`Poly`.

    >>> str(parse_polynomial("(x+y)^2 - x^2"))
    '2*x*y + y^2'
    """
    bad = set(allowed_vars) - set(_VARS)
    if bad:
        raise ValueError(f"polynomials only carry x and y, not {sorted(bad)}")
    ast = parse_ast(text, allowed_vars)
    return evaluate_ast(ast, _VARS.__getitem__, Poly.const)
