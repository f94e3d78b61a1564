"""Products of linear forms kept in factored form.

Root products over large positive systems expand to thousands of terms, while
the Weyl group only permutes their factors up to sign.  ``LinearProduct``
stores ``coeff * prod(form ** mult)`` with each form primitive and its first
nonzero entry positive, which is a canonical form by unique factorization.
Negative multiplicities represent quotients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import DivisionByZeroPoly, NotDivisible, RankMismatch
from .polynomial import Polynomial, norm_coeff


def _primitive(form):
    g = 0
    for a in form:
        g = gcd(g, a)
    if g == 0:
        return None, 0
    lead = next(a for a in form if a)
    if lead < 0:
        g = -g
    return tuple(a // g for a in form), g


class LinearProduct:
    __slots__ = ("var_class", "rank", "coeff", "factors")

    def __init__(self, var_class, rank, coeff=1, factors=()):
        self.var_class = var_class
        self.rank = rank
        n = 2 * rank if var_class == "uy" else rank
        c = Fraction(coeff)
        merged: dict = {}
        for form, mult in factors:
            if len(form) != n:
                raise RankMismatch(f"linear form of length {len(form)} for {n} variables")
            if not mult:
                continue
            prim, g = _primitive(tuple(form))
            if prim is None:
                if mult < 0:
                    raise DivisionByZeroPoly("zero linear form in a denominator")
                c = Fraction(0)
                continue
            c *= Fraction(g) ** mult
            merged[prim] = merged.get(prim, 0) + mult
        if not c:
            merged = {}
        self.coeff = norm_coeff(c)
        self.factors = tuple(sorted((f, m) for f, m in merged.items() if m))

    @classmethod
    def of_forms(cls, forms, var_class, rank, coeff=1):
        return cls(var_class, rank, coeff, [(f, 1) for f in forms])

    def _like(self, coeff, factors):
        return LinearProduct(self.var_class, self.rank, coeff, factors)

    def is_zero(self):
        return self.coeff == 0

    def is_polynomial(self):
        return all(m > 0 for _, m in self.factors)

    def degree(self):
        return sum(m for _, m in self.factors)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like(self.coeff * other, self.factors)
        if isinstance(other, LinearProduct):
            self._check(other)
            return self._like(self.coeff * other.coeff, self.factors + other.factors)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return self._like(-self.coeff, self.factors)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroPoly("division by zero")
            return self._like(Fraction(self.coeff) / other, self.factors)
        if isinstance(other, LinearProduct):
            self._check(other)
            if other.coeff == 0:
                raise DivisionByZeroPoly("division by a zero product")
            return self._like(Fraction(self.coeff) / Fraction(other.coeff),
                              self.factors + tuple((f, -m) for f, m in other.factors))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LinearProduct):
            return (self.var_class == other.var_class and self.rank == other.rank
                    and self.coeff == other.coeff and self.factors == other.factors)
        if isinstance(other, (int, Fraction)):
            return (not self.factors or self.coeff == 0) and self.coeff == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var_class, self.rank, self.coeff, self.factors))

    def same_factors(self, other) -> bool:
        return self.factors == other.factors

    def _check(self, other):
        if other.var_class != self.var_class or other.rank != self.rank:
            raise RankMismatch("linear products over different variables")

    def substitute(self, images, var_class=None, rank=None) -> LinearProduct:
        """Apply the linear substitution x_j -> images[j] factor by factor."""
        var_class = var_class or self.var_class
        rank = self.rank if rank is None else rank
        out = []
        for form, m in self.factors:
            new = [0] * len(images[0])
            for a, img in zip(form, images):
                if a:
                    for t, b in enumerate(img):
                        new[t] += a * b
            out.append((tuple(new), m))
        return LinearProduct(var_class, rank, self.coeff, out)

    def numerator_factors(self):
        return tuple((f, m) for f, m in self.factors if m > 0)

    def denominator_factors(self):
        return tuple((f, -m) for f, m in self.factors if m < 0)

    def expand(self) -> Polynomial:
        """Expanded polynomial; raises NotDivisible if factors remain in the denominator."""
        if not self.is_polynomial():
            raise NotDivisible("linear product has denominator factors")
        return _expand(self.var_class, self.rank, self.factors).scale(self.coeff)

    def to_rational(self):
        from .ratfunc import RationalFunction
        num = _expand(self.var_class, self.rank, self.numerator_factors()).scale(self.coeff)
        den = _expand(self.var_class, self.rank, self.denominator_factors())
        return RationalFunction(num, den)

    def __str__(self):
        if self.coeff == 0:
            return "0"
        parts = []
        for f, m in self.factors:
            lin = Polynomial.linear(f, self.var_class, self.rank)
            s = f"({lin})"
            parts.append(s + (f"^{m}" if m != 1 else ""))
        head = str(self.coeff)
        return head if not parts else head + "*" + "*".join(parts)

    def __repr__(self):
        return f"LinearProduct({self})"


@lru_cache(maxsize=4096)
def _expand(var_class, rank, factors) -> Polynomial:
    p = Polynomial.constant(1, var_class, rank)
    for form, m in factors:
        lin = Polynomial.linear(form, var_class, rank)
        for _ in range(abs(m)):
            p = p * lin
    return p
