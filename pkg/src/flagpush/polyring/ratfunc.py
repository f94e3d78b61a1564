"""Quotients of polynomials with lazy normalization.

Only the rational content and the common monomial factor are cancelled, plus
the cheap case where the numerator is a scalar multiple of the denominator.
Equality is decided by cross-multiplication, so it is exact regardless.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import DivisionByZeroPoly, RankMismatch
from .linprod import LinearProduct
from .polynomial import Polynomial, div_coeff, exponent_sub, try_div


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, LinearProduct):
            num = num.expand()
        if den is None:
            den = Polynomial.constant(1, num.var_class, num.rank)
        elif isinstance(den, LinearProduct):
            den = den.expand()
        elif isinstance(den, (int, Fraction)):
            den = Polynomial.constant(den, num.var_class, num.rank)
        if den.var_class != num.var_class or den.rank != num.rank:
            raise RankMismatch("numerator and denominator over different variables")
        if den.is_zero():
            raise DivisionByZeroPoly("zero denominator")
        self.num, self.den = _normalize(num, den)

    @property
    def var_class(self):
        return self.num.var_class

    @property
    def rank(self):
        return self.num.rank

    @classmethod
    def of(cls, x, like=None):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x)
        if isinstance(x, LinearProduct):
            return x.to_rational()
        if isinstance(x, (int, Fraction)) and like is not None:
            return cls(Polynomial.constant(x, like.var_class, like.rank))
        raise TypeError(f"cannot convert {type(x).__name__} to RationalFunction")

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial_form(self):
        return self.den.is_constant()

    def as_polynomial(self):
        """The polynomial equal to this function, or None if there is none."""
        if self.den.is_constant():
            return self.num.scale(div_coeff(1, self.den.constant_term()))
        return try_div(self.num, self.den)

    def reduced(self) -> RationalFunction:
        p = self.as_polynomial()
        return RationalFunction(p) if p is not None else self

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, LinearProduct)):
            return RationalFunction.of(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.of(other, like=self.num)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        # denominators often differ only by a cancelled factor
        if self.den.degree() >= other.den.degree():
            q = try_div(self.den, other.den)
            if q is not None:
                return RationalFunction(self.num + other.num * q, self.den)
        else:
            q = try_div(other.den, self.den)
            if q is not None:
                return RationalFunction(self.num * q + other.num, other.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroPoly("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def substitute(self, images, var_class=None, rank=None) -> RationalFunction:
        return RationalFunction(self.num.substitute(images, var_class, rank),
                                self.den.substitute(images, var_class, rank))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _normalize(num: Polynomial, den: Polynomial):
    if num.is_zero():
        return num, Polynomial.constant(1, num.var_class, num.rank)
    if den.is_constant():
        c = den.constant_term()
        if c != 1:
            num = num.scale(div_coeff(1, c))
            den = Polynomial.constant(1, num.var_class, num.rank)
        return num, den
    # common monomial factor
    n = num.nvars
    low = list(next(iter(den.terms)))
    for e in list(num.terms) + list(den.terms):
        for j in range(n):
            if e[j] < low[j]:
                low[j] = e[j]
    if any(low):
        low = tuple(low)
        num = num.map_exponents(num.var_class, num.rank, lambda e: exponent_sub(e, low))
        den = den.map_exponents(den.var_class, den.rank, lambda e: exponent_sub(e, low))
        if den.is_constant():
            return _normalize(num, den)
    # denominator primitive over Z with positive leading coefficient
    content = _content(den)
    if content != 1:
        inv = div_coeff(1, content)
        num = num.scale(inv)
        den = den.scale(inv)
    # numerator a scalar multiple of the denominator
    if len(num.terms) == len(den.terms):
        ne, nc = num.leading()
        if ne == den.leading()[0]:
            ratio = div_coeff(nc, den.leading()[1])
            if ratio == 1:
                same = num.terms == den.terms
            elif ratio == -1:
                same = all(den.terms.get(e) == -c for e, c in num.terms.items())
            else:
                same = num.terms == den.scale(ratio).terms
            if same:
                return (Polynomial.constant(ratio, num.var_class, num.rank),
                        Polynomial.constant(1, num.var_class, num.rank))
    return num, den


def _content(p: Polynomial):
    """Rational c with p / c primitive over Z and positive leading coefficient."""
    g = 0
    den_lcm = 1
    for c in p.terms.values():
        if type(c) is int:
            g = gcd(g, c)
        else:
            g = gcd(g, c.numerator)
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    if den_lcm != 1:
        g = Fraction(g, den_lcm)
    if p.leading()[1] < 0:
        g = -g
    return g
