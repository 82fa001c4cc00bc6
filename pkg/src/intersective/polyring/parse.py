"""Text formats for integer polynomials.

Two forms are accepted: an ascending coefficient list ``[c0, c1, ..., cn]``
or an expression over ``x`` using ``+ - * ^``, parentheses and integer
literals, e.g. ``(x^3-2)(x^2+x+1)``.  Juxtaposition means multiplication.
"""

from __future__ import annotations

import json
import re
from typing import List, Tuple

from .intpoly import IntPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*^()]))")


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str]]:
    text = text.replace("−", "-").strip()
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {text[pos:].strip()[0]!r} at {pos}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif var is not None:
            out.append(("x", var))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            got = "end of input" if tok[1] is None else repr(tok[1])
            raise PolyParseError(f"expected {value or 'token'}, got {got}")
        self.i += 1
        return tok

    def expr(self) -> IntPoly:
        acc = self.term_poly()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term_poly()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term_poly(self) -> IntPoly:
        out = IntPoly((1,))
        for f in self.term():
            out = out * f
        return out

    def term(self) -> List[IntPoly]:
        """Multiplicands of one product term (powers expanded into repeats)."""
        sign = 1
        while self.peek() in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        factors = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                factors += self.power()
            elif tok[0] in ("int", "x") or tok == ("op", "("):
                factors += self.power()
            else:
                break
        if sign < 0:
            factors = [IntPoly((-1,))] + factors
        return factors

    def power(self) -> List[IntPoly]:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer literal")
            return [base] * int(val) if int(val) else [IntPoly((1,))]
        return [base]

    def atom(self) -> IntPoly:
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return IntPoly((int(val),))
        if kind == "x":
            self.take()
            return IntPoly.x()
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if (kind, val) == ("op", "-"):
            self.take()
            return -self.atom()
        if val is None:
            raise PolyParseError("unexpected end of input")
        raise PolyParseError(f"unexpected token {val!r}")


def _parse_list(text: str) -> IntPoly:
    try:
        vals = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolyParseError(f"bad coefficient list: {exc}") from None
    if not isinstance(vals, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        raise PolyParseError("coefficient list must contain integer literals only")
    return IntPoly(tuple(vals))


def parse_poly(text: str) -> IntPoly:
    """Parse either text form into an expanded IntPoly."""
    if text.strip().startswith("["):
        return _parse_list(text.strip())
    p = _Parser(_tokenize(text))
    if not p.toks:
        raise PolyParseError("empty polynomial")
    out = p.expr()
    if p.i != len(p.toks):
        raise PolyParseError(f"trailing input at token {p.toks[p.i][1]!r}")
    return out


def parse_factors(text: str) -> List[IntPoly]:
    """Top-level multiplicands of a product expression.

    ``(x^3-2)(x^2+x+1)`` gives two factors; a sum such as ``x^2 + 1`` or a
    coefficient list gives a single factor.  Constant multiplicands are kept
    so callers can reject non-monic input.
    """
    if text.strip().startswith("["):
        return [_parse_list(text.strip())]
    p = _Parser(_tokenize(text))
    if not p.toks:
        raise PolyParseError("empty polynomial")
    factors = p.term()
    if p.i == len(p.toks):
        return factors
    return [parse_poly(text)]
