"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are stored as ``int`` when integral and ``Fraction`` otherwise,
so the common integral case runs on machine-speed integer arithmetic.  Terms
are ordered graded-lexicographically with x1 > x2 > ... > xn.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from operator import add, sub

from ..errors import DivisionByZeroPoly, RankMismatch

VAR_CLASSES = ("u", "y", "z", "uy")


def norm_coeff(c):
    """Exact rational as int when integral, else Fraction."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return int(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def div_coeff(a, b):
    if b == 0:
        raise DivisionByZeroPoly("division by zero coefficient")
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return norm_coeff(Fraction(a) / Fraction(b))


def order_key(e):
    return (sum(e), e)


def variable_name(var_class: str, rank: int, j: int) -> str:
    if var_class == "uy":
        return f"u{j + 1}" if j < rank else f"y{j - rank + 1}"
    return f"{var_class}{j + 1}"


def format_coeff(c) -> str:
    c = norm_coeff(c)
    if type(c) is int:
        return str(c)
    return f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Polynomial in the u-, y- or z-variables (or the 2*rank variables u, y)."""

    __slots__ = ("var_class", "rank", "terms", "_lead", "_hash")

    def __init__(self, var_class: str, rank: int, terms=None, *, _clean: bool = False):
        if var_class not in VAR_CLASSES:
            raise ValueError(f"unknown variable class {var_class!r}")
        self.var_class = var_class
        self.rank = rank
        self._lead = None
        self._hash = None
        if _clean:
            self.terms = terms
            return
        n = self.nvars
        out = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for e, c in items:
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise RankMismatch(f"exponent vector {e} invalid for {n} variables")
            c = norm_coeff(c)
            if c:
                out[e] = norm_coeff(out.get(e, 0) + c)
                if not out[e]:
                    del out[e]
        self.terms = out

    # -- constructors -----------------------------------------------------
    @property
    def nvars(self) -> int:
        return 2 * self.rank if self.var_class == "uy" else self.rank

    @classmethod
    def zero(cls, var_class, rank):
        return cls(var_class, rank, {}, _clean=True)

    @classmethod
    def constant(cls, c, var_class, rank):
        n = 2 * rank if var_class == "uy" else rank
        c = norm_coeff(c)
        return cls(var_class, rank, {(0,) * n: c} if c else {}, _clean=True)

    @classmethod
    def linear(cls, form, var_class, rank):
        """Sum of form[j] * x_j over the variables of the class."""
        n = 2 * rank if var_class == "uy" else rank
        if len(form) != n:
            raise RankMismatch(f"linear form of length {len(form)} for {n} variables")
        terms = {}
        for j, a in enumerate(form):
            if a:
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = norm_coeff(a)
        return cls(var_class, rank, terms, _clean=True)

    @classmethod
    def gen(cls, var_class, rank, j):
        """The 0-based j-th variable."""
        n = 2 * rank if var_class == "uy" else rank
        e = [0] * n
        e[j] = 1
        return cls(var_class, rank, {tuple(e): 1}, _clean=True)

    def _like(self, terms):
        return Polynomial(self.var_class, self.rank, terms, _clean=True)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.var_class != self.var_class or other.rank != self.rank:
                raise RankMismatch(
                    f"cannot combine {self.var_class}/{self.rank} with "
                    f"{other.var_class}/{other.rank} polynomials")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.var_class, self.rank)
        return None

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if self._lead is None:
            if not self.terms:
                raise DivisionByZeroPoly("zero polynomial has no leading term")
            e = max(self.terms, key=order_key)
            self._lead = (e, self.terms[e])
        return self._lead

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def coefficient(self, e):
        return self.terms.get(tuple(e), 0)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def scale(self, c):
        c = norm_coeff(c)
        if not c:
            return self._like({})
        if c == 1:
            return self
        if type(c) is int:
            return self._like({e: v * c for e, v in self.terms.items()})
        return self._like({e: norm_coeff(v * c) for e, v in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = norm_coeff(v) if type(v) is not int else v
            else:
                out.pop(e, None)
        return self._like(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = norm_coeff(v) if type(v) is not int else v
            else:
                out.pop(e, None)
        return self._like(out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return self._like(_clean_terms(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.var_class, self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            if c == 0:
                raise DivisionByZeroPoly("division by zero")
            return self.scale(Fraction(1) / Fraction(c))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.var_class == other.var_class and self.rank == other.rank
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var_class, self.rank, frozenset(self.terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------
    def substitute(self, images, var_class=None, rank=None) -> Polynomial:
        """Replace variable j by the integer linear form images[j].

        Forms are tuples over the target variables; the target class defaults
        to this polynomial's class.
        """
        var_class = var_class or self.var_class
        rank = self.rank if rank is None else rank
        images = tuple(tuple(f) for f in images)
        if len(images) != self.nvars:
            raise RankMismatch(f"{len(images)} images for {self.nvars} variables")
        out: dict = {}
        get = out.get
        for e, c in self.terms.items():
            for m, k in _monomial_image(images, e):
                out[m] = get(m, 0) + c * k
        return Polynomial(var_class, rank, _clean_terms(out), _clean=True)

    def map_exponents(self, var_class, rank, fn) -> Polynomial:
        """Re-index terms with fn(exponent) -> new exponent or None (dropped)."""
        out = {}
        for e, c in self.terms.items():
            e2 = fn(e)
            if e2 is not None:
                out[e2] = out.get(e2, 0) + c
        return Polynomial(var_class, rank, _clean_terms(out), _clean=True)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = "*".join(
                variable_name(self.var_class, self.rank, j) + (f"^{x}" if x > 1 else "")
                for j, x in enumerate(e) if x)
            if not mono:
                body = format_coeff(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_coeff(a)}*{mono}"
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.var_class!r}, {self.rank}, {str(self)!r})"

    def to_json(self):
        return [[list(e), _json_coeff(c)] for e, c in self.sorted_terms()]


def _json_coeff(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _clean_terms(out: dict) -> dict:
    res = {}
    for e, c in out.items():
        if c:
            res[e] = c if type(c) is int else norm_coeff(c)
    return res


@lru_cache(maxsize=200_000)
def _monomial_image(images, e):
    """Image of the monomial x^e under x_j -> images[j], as ((exp, int), ...)."""
    j = next((j for j, x in enumerate(e) if x), None)
    if j is None:
        return (((0,) * len(images[0]) if images else (), 1),)
    rest = e[:j] + (e[j] - 1,) + e[j + 1:]
    base = _monomial_image(images, rest)
    form = images[j]
    out: dict = {}
    get = out.get
    for t, a in enumerate(form):
        if not a:
            continue
        for m, k in base:
            m2 = m[:t] + (m[t] + 1,) + m[t + 1:]
            out[m2] = get(m2, 0) + a * k
    return tuple((m, k) for m, k in out.items() if k)


def exponent_sub(a, b):
    return tuple(map(sub, a, b))


def try_div(p: Polynomial, q: Polynomial):
    """Quotient r with p == q*r, or None when q does not divide p."""
    q = p._coerce(q)
    if not q.terms:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if not p.terms:
        return p
    ql, qc = q.leading()
    if len(q.terms) == 1:
        out = {}
        for e, c in p.terms.items():
            d = exponent_sub(e, ql)
            if min(d) < 0:
                return None
            out[d] = div_coeff(c, qc)
        return p._like(out)
    q_rest = [(e, c) for e, c in q.terms.items() if e != ql]
    rem = dict(p.terms)
    quot = {}
    # max-heap on the graded-lex key; entries may be stale
    heap = [_heap_key(e) for e in rem]
    heapq.heapify(heap)
    while rem:
        k = heapq.heappop(heap)
        e = k[2]
        if e not in rem:
            continue
        d = exponent_sub(e, ql)
        if min(d) < 0:
            return None
        f = div_coeff(rem.pop(e), qc)
        quot[d] = f
        for eq, cq in q_rest:
            m = tuple(map(add, d, eq))
            v = rem.get(m, 0) - f * cq
            if v:
                if m not in rem:
                    heapq.heappush(heap, _heap_key(m))
                rem[m] = v
            else:
                rem.pop(m, None)
    return p._like(_clean_terms(quot))


def _heap_key(e):
    return (-sum(e), tuple(-x for x in e), e)
