"""Operator-expression language: tokenizer, parser, evaluator, renderer.

The surface consists of the registry names for the working dimension,
raw generators x1/d1/R1 per variable, scalar literals (integers, i,
sqrt2, mu1..mun), the binary operators + - * /, integer powers with ^,
and the function forms comm(,), acomm(,) and adjoint().  Precedence is
power, then unary minus, then * and /, then + and -.

Division accepts only constant invertible divisors, and a negative
power accepts only reflection-free derivative-free monomials with
constant coefficients; both restrictions keep every expression inside
the algebra.

render is the inverse direction: the canonical normal-form string of an
operator parses back to an equal operator (round trip at the value
level, not the token level).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from .builders import build, names
from .opalg import (
    NFMonomial,
    OperatorElement,
    anticommutator,
    commutator,
)
from .scalars import SQRT2, BaseNumber, I, Scalar


class ParseError(ValueError):
    """Syntax or resolution failure, with the source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    identifier: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    function: str
    arguments: Tuple["Expr", ...]


Expr = Union[Name, Num, BinOp, Neg, Pow, Call]

_FUNCTIONS = ("adjoint", "acomm", "comm")
_RAW = re.compile(r"([xdR])([1-9]\d*)$")
_MU = re.compile(r"mu([1-9]\d*)$")
_PUNCT = "+-*/^(),"


def _lexicon(dims: int) -> List[str]:
    entries = list(names(dims)) + list(_FUNCTIONS) + ["sqrt2", "i"]
    for k in range(1, dims + 1):
        entries += [f"x{k}", f"d{k}", f"R{k}", f"mu{k}"]
    entries.sort(key=lambda s: (-len(s), s))
    return entries


Token = Tuple[str, object, int]  # kind, value, position


def _tokenize(text: str, dims: int) -> List[Token]:
    lexicon = _lexicon(dims)
    out: List[Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        matched = None
        for entry in lexicon:
            if text.startswith(entry, pos):
                matched = entry
                break
        # A name match wins over punctuation so that J+ and A-1 lex as
        # single tokens; no lexicon entry starts with a punctuation
        # character, so the converse cannot happen.
        if matched is not None:
            out.append(("name", matched, pos))
            pos += len(matched)
            continue
        if ch in _PUNCT:
            out.append(("punct", ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            out.append(("num", int(text[pos:end]), pos))
            pos = end
            continue
        raise ParseError(f"unknown symbol {text[pos:pos + 8]!r}", pos)
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value: str) -> Token:
        kind, val, pos = self.peek()
        if kind != "punct" or val != value:
            raise ParseError(f"expected {value!r}", pos)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "punct" and val in "+-":
                self.advance()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "punct" and val in "*/":
                self.advance()
                node = BinOp(val, node, self.unary())
            else:
                return node

    def unary(self) -> Expr:
        kind, val, _ = self.peek()
        if kind == "punct" and val == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "punct" and val == "^":
            self.advance()
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        negative = False
        kind, val, pos = self.peek()
        if kind == "punct" and val == "-":
            self.advance()
            negative = True
            kind, val, pos = self.peek()
        if kind != "num":
            raise ParseError("expected an integer exponent", pos)
        self.advance()
        return -val if negative else val

    def atom(self) -> Expr:
        kind, val, pos = self.advance()
        if kind == "num":
            return Num(val)
        if kind == "punct" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            if val in _FUNCTIONS:
                self.expect("(")
                args = [self.expr()]
                while True:
                    k2, v2, _ = self.peek()
                    if k2 == "punct" and v2 == ",":
                        self.advance()
                        args.append(self.expr())
                    else:
                        break
                self.expect(")")
                arity = 1 if val == "adjoint" else 2
                if len(args) != arity:
                    raise ParseError(
                        f"{val} takes {arity} argument(s), got {len(args)}",
                        pos)
                return Call(val, tuple(args))
            return Name(val)
        raise ParseError("expected an expression", pos)


def parse(text: str, dims: int) -> Expr:
    """Parse text into an AST; dims fixes the name lexicon."""
    if dims < 1:
        raise ValueError("dims must be at least 1")
    return _Parser(_tokenize(text, dims)).parse()


# Evaluation ----------------------------------------------------------------

def _resolve_name(identifier: str, dims: int) -> OperatorElement:
    if identifier == "i":
        return I * OperatorElement.identity(dims)
    if identifier == "sqrt2":
        return SQRT2 * OperatorElement.identity(dims)
    m = _MU.match(identifier)
    if m:
        index = int(m.group(1)) - 1
        return Scalar.parameter(index, dims) * OperatorElement.identity(dims)
    m = _RAW.match(identifier)
    if m:
        index = int(m.group(2)) - 1
        if m.group(1) == "x":
            return OperatorElement.x(index, dims)
        if m.group(1) == "d":
            return OperatorElement.d(index, dims)
        return OperatorElement.r(index, dims)
    return build(identifier, dims)


def _constant_of(a: OperatorElement) -> Optional[BaseNumber]:
    terms = list(a.terms())
    if len(terms) != 1:
        return None
    mono, coeff = terms[0]
    if not mono.is_identity():
        return None
    parts = list(coeff.terms())
    if len(parts) != 1 or any(parts[0][0]):
        return None
    return parts[0][1]


def _invert(a: OperatorElement, dims: int) -> OperatorElement:
    terms = list(a.terms())
    if len(terms) == 1:
        mono, coeff = terms[0]
        pure = all(b == 0 and e == 0 for _, b, e in mono.blocks)
        parts = list(coeff.terms())
        constant = (len(parts) == 1 and not any(parts[0][0]))
        if pure and constant:
            flipped = NFMonomial(tuple((-blk[0], 0, 0) for blk in mono.blocks))
            out = parts[0][1].inverse() * OperatorElement.identity(dims)
            for j, (aexp, _, _) in enumerate(flipped.blocks):
                if aexp:
                    out = out * OperatorElement.x(j, dims, aexp)
            return out
    raise ValueError(
        "negative powers need a coordinate monomial with constant coefficient")


def evaluate(ast: Expr, dims: int) -> OperatorElement:
    """Evaluate an AST to an operator on dims variables."""
    if isinstance(ast, Num):
        return ast.value * OperatorElement.identity(dims)
    if isinstance(ast, Name):
        return _resolve_name(ast.identifier, dims)
    if isinstance(ast, Neg):
        return -evaluate(ast.operand, dims)
    if isinstance(ast, Pow):
        base = evaluate(ast.base, dims)
        if ast.exponent >= 0:
            return base ** ast.exponent
        return _invert(base, dims) ** (-ast.exponent)
    if isinstance(ast, BinOp):
        left = evaluate(ast.left, dims)
        right = evaluate(ast.right, dims)
        if ast.op == "+":
            return left + right
        if ast.op == "-":
            return left - right
        if ast.op == "*":
            return left * right
        divisor = _constant_of(right)
        if divisor is None:
            raise ValueError("division needs a constant divisor")
        return left * divisor.inverse()
    if isinstance(ast, Call):
        args = [evaluate(a, dims) for a in ast.arguments]
        if ast.function == "comm":
            return commutator(*args)
        if ast.function == "acomm":
            return anticommutator(*args)
        return args[0].adjoint()
    raise TypeError(f"not an AST node: {ast!r}")


def parse_eval(text: str, dims: int) -> OperatorElement:
    """Parse and evaluate in one step."""
    return evaluate(parse(text, dims), dims)


def render(a: OperatorElement) -> str:
    """Canonical normal-form string; parses back to an equal operator."""
    return str(a)
