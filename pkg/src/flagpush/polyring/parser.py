"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*          no implicit multiplication
    factor   := base ("^" NAT)?
    base     := RATIONAL | VARIABLE | "(" expr ")" | "-" factor
    RATIONAL := NAT ("/" NAT)?
    VARIABLE := ("u" | "y" | "z") NAT
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ExponentNotNonnegativeInteger, PolySyntaxError, UnknownVariable
from .polynomial import Polynomial

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1):
            toks.append(("nat", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, rank, var_class):
        self.toks = _tokenize(text)
        self.k = 0
        self.rank = rank
        self.var_class = var_class
        self.letters = ("u", "y") if var_class == "uy" else (var_class,)

    @property
    def tok(self):
        return self.toks[self.k]

    def take(self, kind):
        t = self.tok
        if t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", t[2])
        self.k += 1
        return t

    def parse(self):
        if self.tok[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        p = self.expr()
        if self.tok[0] != "end":
            raise PolySyntaxError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.take(self.tok[0])[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.tok[0] == "*":
            self.take("*")
            p = p * self.factor()
        return p

    def factor(self):
        b = self.base()
        if self.tok[0] == "^":
            self.take("^")
            t = self.tok
            if t[0] != "nat":
                raise ExponentNotNonnegativeInteger(
                    "exponent must be a nonnegative integer literal", t[2])
            self.k += 1
            b = b ** int(t[1])
        return b

    def base(self):
        t = self.tok
        kind = t[0]
        if kind == "nat":
            self.k += 1
            value = Fraction(int(t[1]))
            if self.tok[0] == "/":
                self.take("/")
                d = self.take("nat")
                if int(d[1]) == 0:
                    raise PolySyntaxError("zero denominator", d[2])
                value = Fraction(int(t[1]), int(d[1]))
            return Polynomial.constant(value, self.var_class, self.rank)
        if kind == "name":
            self.k += 1
            return self.variable(t[1], t[2])
        if kind == "(":
            self.take("(")
            p = self.expr()
            self.take(")")
            return p
        if kind == "-":
            self.take("-")
            return -self.factor()
        what = "end of input" if kind == "end" else repr(t[1])
        raise PolySyntaxError(f"unexpected {what}", t[2])

    def variable(self, name, pos):
        m = re.fullmatch(r"([uyz])(\d+)", name)
        if not m or m.group(1) not in self.letters:
            raise UnknownVariable(f"unknown variable {name!r}", pos)
        i = int(m.group(2))
        if not 1 <= i <= self.rank:
            raise UnknownVariable(f"unknown variable {name!r} for rank {self.rank}", pos)
        j = i - 1
        if self.var_class == "uy" and m.group(1) == "y":
            j += self.rank
        return Polynomial.gen(self.var_class, self.rank, j)


def parse_poly(text: str, rank: int, var_class: str = "z") -> Polynomial:
    return _Parser(text, rank, var_class).parse()
