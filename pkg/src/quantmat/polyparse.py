"""Recursive-descent parser and printer for polynomials in X1..Xd.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := rational | var | '(' expr ')'

A leading '-' is accepted on a term. ``rational`` is ``p`` or ``p/r``
with decimal integers.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .spectrum import PolyV

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>X\d+)|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


# polynomials are dicts {exponent tuple: Fraction} over a growing variable count

def _pad(e: tuple[int, ...], d: int) -> tuple[int, ...]:
    return e + (0,) * (d - len(e))


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    d = max((len(e) for e in list(a) + list(b)), default=0)
    out = {_pad(e, d): c for e, c in a.items()}
    for e, c in b.items():
        e = _pad(e, d)
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: dict, b: dict) -> dict:
    d = max((len(e) for e in list(a) + list(b)), default=0)
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(_pad(e1, d), _pad(e2, d)))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            mt = _TOKEN.match(text, pos)
            if not mt:
                start = len(text[pos:]) - len(text[pos:].lstrip()) + pos
                raise ParseError(f"unexpected character {text[start]!r}", start, text)
            kind = mt.lastgroup
            start = mt.start(kind)
            self.tokens.append((kind, mt.group(kind), start))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg: str):
        raise ParseError(msg, self.peek()[2], self.text)

    def expr(self) -> dict:
        neg = False
        if self.peek()[:2] == ("op", "-"):
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = {e: -c for e, c in acc.items()}
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            acc = _add(acc, self.term(), sign)
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = _mul(acc, self.factor())
        return acc

    def factor(self) -> dict:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, _ = self.peek()
            if kind != "num" or "/" in val:
                self.fail("expected a natural exponent")
            self.take()
            out: dict = {(): Fraction(1)}
            for _ in range(int(val)):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            c = Fraction(val)
            return {(): c} if c else {}
        if kind == "var":
            self.take()
            k = int(val[1:])
            if k < 1:
                raise ParseError("variables are numbered from X1", pos, self.text)
            return {(0,) * (k - 1) + (1,): Fraction(1)}
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, a variable or '('" if kind != "end"
                  else "unexpected end of input")


def parse_poly(text: str, d: int | None = None) -> PolyV:
    """Parse ``text`` into a :class:`PolyV` over ``d`` variables.

    ``d`` defaults to the largest variable index that occurs.
    """
    p = _Parser(text)
    if not p.tokens:
        raise ParseError("empty expression", 0, text)
    terms = p.expr()
    if p.i != len(p.tokens):
        p.fail("unexpected trailing input")
    used = max((len(e) for e in terms), default=0)
    # keep positions of variables that only appeared with zero coefficient
    used = max([used] + [int(t[1][1:]) for t in p.tokens if t[0] == "var"])
    if d is None:
        d = max(used, 1)
    elif used > d:
        raise ParseError(f"variable X{used} exceeds the {d} available", 0, text)
    return PolyV(d, {_pad(e, d): c for e, c in terms.items()})


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(V: PolyV) -> str:
    """Canonical text: terms by decreasing total degree, then decreasing
    exponent vector; ``c*X1^2*X2`` style."""
    if not V.terms:
        return "0"
    order = sorted(V.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    out = ""
    for k, (e, c) in enumerate(order):
        c = Fraction(c)
        word = "*".join(f"X{j + 1}" if x == 1 else f"X{j + 1}^{x}"
                        for j, x in enumerate(e) if x)
        a = abs(c)
        if not word:
            body = _format_rational(a)
        elif a == 1:
            body = word
        else:
            body = f"{_format_rational(a)}*{word}"
        if k == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out
