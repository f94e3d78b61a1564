"""Weyl-group actions and the operators built from them."""
from __future__ import annotations

from functools import lru_cache

from ..errors import DivisionByZeroPoly, IndexOutOfRange, NotDivisible, RankMismatch
from ..rootsys import RootSubset, RootSystem
from ..weylgrp import WeylElement
from .linprod import LinearProduct
from .polynomial import Polynomial, try_div
from .ratfunc import RationalFunction


def char_to_linear(gamma, var_class: str = "z") -> Polynomial:
    """c1 of the line bundle of a character: sum_i gamma_i x_i."""
    if var_class not in ("u", "y", "z"):
        raise ValueError("char_to_linear takes one of the classes u, y, z")
    return Polynomial.linear(tuple(gamma), var_class, len(gamma))


def embed_uy(p: Polynomial) -> Polynomial:
    """View a u- or y-polynomial inside the 2*rank variable ring Q[u, y]."""
    if p.var_class == "uy":
        return p
    if p.var_class not in ("u", "y", "z"):
        raise ValueError(f"cannot embed class {p.var_class}")
    n = p.rank
    pad = (0,) * n
    if p.var_class == "u":
        return p.map_exponents("uy", n, lambda e: e + pad)
    return p.map_exponents("uy", n, lambda e: pad + e)


def relabel(p: Polynomial, var_class: str) -> Polynomial:
    """Rename the variables of a single-class polynomial (u, y, z)."""
    if p.var_class == "uy" or var_class == "uy":
        raise ValueError("relabel works between the single classes u, y, z")
    return Polynomial(var_class, p.rank, dict(p.terms), _clean=True)


def substitute_zero_u(p: Polynomial) -> Polynomial:
    """Restriction to the fiber: every u_i -> 0 and y_i -> z_i."""
    if p.var_class == "uy":
        n = p.rank
        return p.map_exponents("z", n, lambda e: None if any(e[:n]) else e[n:])
    if p.var_class == "u":
        return Polynomial.constant(p.constant_term(), "z", p.rank)
    return relabel(p, "z")


@lru_cache(maxsize=None)
def _images(matrix, var_class):
    n = len(matrix)
    cols = tuple(tuple(row[j] for row in matrix) for j in range(n))
    if var_class != "uy":
        return cols
    zero = (0,) * n
    return tuple(c + zero for c in cols) + tuple(zero + c for c in cols)


def weyl_images(w: WeylElement, var_class: str):
    """Images of the variables under w: x_i -> c1(w . chi_i)."""
    return _images(w.matrix, var_class)


@lru_cache(maxsize=None)
def _restriction_images(matrix):
    # u_i -> u_i, y_i -> c1(w . chi_i) in the u-variables
    n = len(matrix)
    ident = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    cols = tuple(tuple(row[j] for row in matrix) for j in range(n))
    return ident + cols


def restriction_images(w: WeylElement):
    return _restriction_images(w.matrix)


def weyl_act_poly(w: WeylElement, p):
    """The ring automorphism x_i -> c1(w . chi_i); accepts every polynomial kind."""
    if len(w.matrix) != p.rank:
        raise RankMismatch(f"rank {len(w.matrix)} element acting on rank {p.rank} polynomial")
    return p.substitute(weyl_images(w, p.var_class))


def _roots_and_rank(roots, rank):
    if isinstance(roots, RootSystem):
        return roots.positive_roots, roots.rank
    if isinstance(roots, RootSubset):
        return roots.roots, roots.parent.rank
    roots = tuple(roots)
    if rank is None:
        if not roots:
            raise ValueError("rank is required for an empty root list")
        rank = len(roots[0])
    return roots, rank


def root_product(roots, var_class: str = "z", rank: int | None = None) -> Polynomial:
    """Expanded product of c1(alpha) over the roots; 1 for an empty set."""
    roots, rank = _roots_and_rank(roots, rank)
    p = Polynomial.constant(1, var_class, rank)
    for a in roots:
        p = p * Polynomial.linear(a, var_class, rank)
    return p


def root_product_factored(roots, var_class: str = "z", rank: int | None = None) -> LinearProduct:
    roots, rank = _roots_and_rank(roots, rank)
    if var_class == "uy":
        raise ValueError("use a single variable class for root products")
    return LinearProduct.of_forms(roots, var_class, rank)


def lift_factored_y(lp: LinearProduct) -> LinearProduct:
    """Embed a factored y-class product into the u, y ring."""
    n = lp.rank
    pad = (0,) * n
    return LinearProduct("uy", n, lp.coeff, [(pad + f, m) for f, m in lp.factors])


def _signed_sum(terms):
    """Sum (sign, value) pairs; factored values sharing factors stay factored."""
    terms = list(terms)
    if not terms:
        return None
    first = terms[0][1]
    if isinstance(first, LinearProduct) and all(
            isinstance(v, LinearProduct) and v.factors == first.factors for _, v in terms):
        coeff = sum(s * v.coeff for s, v in terms)
        return LinearProduct(first.var_class, first.rank, coeff, first.factors)
    total = None
    for s, v in terms:
        if isinstance(v, LinearProduct):
            v = v.expand()
        v = v if s == 1 else -v
        total = v if total is None else total + v
    return total


def antisymmetrize(p, elements):
    """sum over v of (-1)^l(v) v.p for the given group elements."""
    elements = list(elements)
    out = _signed_sum((v.sign, weyl_act_poly(v, p)) for v in elements)
    if out is None:
        return p.scale(0) if isinstance(p, Polynomial) else p * 0
    return out


def symmetrize_sum(p: RationalFunction, elements) -> RationalFunction:
    """sum over v of v.p, exact."""
    p = RationalFunction.of(p)
    total = None
    for v in elements:
        t = p.substitute(weyl_images(v, p.var_class))
        total = t if total is None else total + t
    if total is None:
        return RationalFunction(p.num.scale(0))
    return total


def exact_div(p, q):
    """r with p == q*r; raises NotDivisible when no polynomial quotient exists."""
    if isinstance(p, LinearProduct) and isinstance(q, LinearProduct):
        if q.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        if p.is_zero():
            return p
        r = p / q
        if not r.is_polynomial():
            raise NotDivisible(f"{q} does not divide {p}")
        return r
    if isinstance(p, LinearProduct):
        p = p.expand()
    if isinstance(q, LinearProduct):
        q = q.expand()
    if q.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = try_div(p, q)
    if r is None:
        raise NotDivisible(f"{q} does not divide {p}")
    if r * q != p:
        raise AssertionError("exact division failed re-multiplication")
    return r


def _simple_element(rs: RootSystem, i: int) -> WeylElement:
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple index {i} outside 1..{rs.rank}")
    return WeylElement(rs.simple_reflection_matrices[i - 1], 1, (i,), rs)


def divided_difference(p: Polynomial, i: int, rs: RootSystem) -> Polynomial:
    """(p - s_i.p) / c1(alpha_i)."""
    s = _simple_element(rs, i)
    alpha = Polynomial.linear(rs.simple_roots[i - 1], p.var_class, rs.rank)
    return exact_div(p - weyl_act_poly(s, p), alpha)


def demazure_compose(p: Polynomial, word, rs: RootSystem) -> Polynomial:
    """Apply the divided differences along ``word`` from left to right.

    Unreduced words are accepted; the result then depends on the word.
    """
    for i in word:
        if p.is_zero():
            break
        p = divided_difference(p, i, rs)
    return p
