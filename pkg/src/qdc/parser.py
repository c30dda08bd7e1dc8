"""Expression grammar for elements, shared by the CLI and the catalog files.

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' integer]
    atom   := name | rational | 'q' | '(' expr ')'

Rationals are integer or num/den literals.  Negative exponents are allowed on
q and on rationals (scalar inverses); generator inverses are spelled as their
own names (a_inv, d_inv, Dgamma_inv).  parse -> print is the identity on the
AST, which is what the catalog round-trip test pins down.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, UnknownGeneratorError
from .kernel import Element
from .ring import LaurentScalar

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()]))"
)


@dataclass(frozen=True)
class Name:
    ident: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RatLit:
    value: Fraction


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    # sequence of (sign, Product) with sign in {+1, -1}
    terms: tuple


def tokenize(text):
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        if text[pos] == "\n":
            line += 1
            line_start = pos + 1
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos - line_start + 1
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        col = m.start(m.lastgroup) - line_start + 1
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), line, col))
        pos = m.end()
    tokens.append(("end", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op):
        kind, val, line, col = self.peek()
        if kind == "op" and val == op:
            return self.next()
        raise ParseError(f"expected {op!r}, got {val or 'end of input'!r}", line, col)

    def parse_expr(self):
        terms = []
        sign = 1
        kind, val, _, _ = self.peek()
        if kind == "op" and val == "-":
            self.next()
            sign = -1
        terms.append((sign, self.parse_term()))
        while True:
            kind, val, _, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                terms.append((1 if val == "+" else -1, self.parse_term()))
            else:
                break
        return Sum(tuple(terms))

    def parse_term(self):
        factors = [self.parse_factor()]
        while True:
            kind, val, _, _ = self.peek()
            if kind == "op" and val == "*":
                star_line, star_col = self.peek()[2], self.peek()[3]
                self.next()
                nk, nv, nl, nc = self.peek()
                if nk == "op" and nv == "*":
                    raise ParseError("'**' is not an operator; use '^'", nl, nc)
                factors.append(self.parse_factor())
            else:
                break
        return Product(tuple(factors))

    def parse_factor(self):
        atom = self.parse_atom()
        kind, val, _, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            neg = False
            kind, val, line, col = self.peek()
            if kind == "op" and val == "-":
                self.next()
                neg = True
                kind, val, line, col = self.peek()
            if kind != "int":
                raise ParseError("exponent must be an integer", line, col)
            self.next()
            exp = -int(val) if neg else int(val)
            return Power(atom, exp)
        return atom

    def parse_atom(self):
        kind, val, line, col = self.next()
        if kind == "name":
            return Name(val, line, col)
        if kind == "int":
            return RatLit(Fraction(int(val)))
        if kind == "rat":
            num, den = val.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator", line, col)
            return RatLit(Fraction(int(num), int(den)))
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected an atom, got {val or 'end of input'!r}", line, col)


def parse_ast(text):
    p = _Parser(text)
    ast = p.parse_expr()
    kind, val, line, col = p.peek()
    if kind != "end":
        raise ParseError(f"trailing input starting at {val!r}", line, col)
    return ast


# -- printing ----------------------------------------------------------------


def print_ast(node):
    if isinstance(node, Sum):
        parts = []
        for sign, term in node.terms:
            body = print_ast(term)
            if not parts:
                parts.append("-" + body if sign < 0 else body)
            else:
                parts.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(parts)
    if isinstance(node, Product):
        return "*".join(_factor_str(f) for f in node.factors)
    return _factor_str(node)


def _factor_str(node):
    if isinstance(node, Power):
        return f"{_atom_str(node.base)}^{node.exp}"
    return _atom_str(node)


def _atom_str(node):
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, RatLit):
        return str(node.value)
    if isinstance(node, (Sum, Product)):
        return f"({print_ast(node)})"
    raise TypeError(f"not an AST node: {node!r}")


# -- evaluation ---------------------------------------------------------------


def eval_ast(node, p, resolve=None):
    """Evaluate an AST to an Element over presentation p.

    `resolve` optionally overrides name lookup (name -> Element); by default
    names resolve to generators or defined composites of p.
    """
    if isinstance(node, Sum):
        out = Element.zero()
        for sign, term in node.terms:
            val = eval_ast(term, p, resolve)
            out = out + (val if sign > 0 else -val)
        return out
    if isinstance(node, Product):
        out = Element.unit()
        for f in node.factors:
            out = out * eval_ast(f, p, resolve)
        return out
    if isinstance(node, Power):
        if node.exp >= 0:
            base = eval_ast(node.base, p, resolve)
            out = Element.unit()
            for _ in range(node.exp):
                out = out * base
            return out
        # negative exponents only for scalar atoms
        if isinstance(node.base, Name) and node.base.ident == "q":
            return Element.unit(LaurentScalar.q_power(node.exp))
        if isinstance(node.base, RatLit):
            return Element.unit(LaurentScalar.from_fraction(node.base.value ** node.exp))
        raise ParseError(
            "negative exponent on a non-scalar atom (use *_inv generators)",
            getattr(node.base, "line", 0),
            getattr(node.base, "col", 0),
        )
    if isinstance(node, Name):
        if node.ident == "q":
            return Element.unit(LaurentScalar.q_power(1))
        if resolve is not None:
            got = resolve(node.ident)
            if got is not None:
                return got
        if node.ident in p.index:
            return Element.word((node.ident,))
        if node.ident in p.defined:
            return p.defined[node.ident]
        raise UnknownGeneratorError(
            f"unknown generator {node.ident!r} in presentation {p.name}",
            node.line,
            node.col,
        )
    if isinstance(node, RatLit):
        return Element.unit(LaurentScalar.from_fraction(node.value))
    raise TypeError(f"not an AST node: {node!r}")


def parse_expression(text, p, resolve=None):
    """Parse and evaluate in one go; the CLI entry point for expressions."""
    return eval_ast(parse_ast(text), p, resolve)
