"""Fixed-point localization on G/T and G/H and the Gysin map f: G/T -> G/H.

Torus-equivariant classes are stored by their restrictions to the fixed
points: a value in Q[u_1..u_n] (or its fraction field) per Weyl element for
G/T, and per left coset w W_H for G/H.  Polynomial degree d corresponds to
cohomological degree 2d throughout; ordinary integrals are read off by
evaluating an equivariant integral at u = 0.

Three routes compute f_*: the signed symmetrization closed form, the relative
localization pushforward composed with fiber restriction, and divided
differences along a reduced word of the longest element of W_H.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._intmat import matmul
from .errors import (EmptySubset, NotInImage, NotInvariant, NotPolynomialResult,
                     RankMismatch, RepresentativeMismatch, RouteDisagreement)
from .polyring import (LinearProduct, Polynomial, RationalFunction, antisymmetrize,
                       demazure_compose, embed_uy, exact_div, relabel, root_product,
                       root_product_factored, substitute_zero_u, symmetrize_sum,
                       weyl_act_poly)
from .polyring.ops import lift_factored_y, restriction_images
from .polyring.polynomial import try_div
from .rootsys import RootSystem, _check_indices, parabolic_subsystem
from .weylgrp import CosetList, WeylGroup, longest_element, weyl_group

ROUTES = ("closed_form", "localization", "demazure_oracle")

# the closed form re-derives its answer as sum_v v.(p / denom) only for W_H up
# to this order; beyond it the rational-function sum dominates the runtime
SYMMETRIZED_CHECK_LIMIT = 48


@dataclass
class EquivClassGT:
    """Class on G/T by its fixed-point values, indexed like ``group.elements``.

    Values are RationalFunction or, for products of linear forms, LinearProduct.
    """

    group: WeylGroup
    values: list

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise RankMismatch(f"{len(self.values)} values for |W| = {self.group.order}")


@dataclass
class EquivClassGH:
    cosets: CosetList
    values: list

    def __post_init__(self):
        if len(self.values) != len(self.cosets):
            raise RankMismatch(f"{len(self.values)} values for {len(self.cosets)} cosets")


@dataclass
class GysinResult:
    result: Polynomial
    route: str
    intermediate: EquivClassGH | None = None


# -- value helpers --------------------------------------------------------

def _is_poly_value(v) -> bool:
    if isinstance(v, LinearProduct):
        return v.is_polynomial()
    if isinstance(v, RationalFunction):
        return v.as_polynomial() is not None
    return isinstance(v, Polynomial)


def _as_poly(v):
    """Polynomial equal to v, or None."""
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, LinearProduct):
        return v.expand() if v.is_polynomial() else None
    return v.as_polynomial()


def _quotient(x, e):
    if isinstance(x, LinearProduct) and isinstance(e, LinearProduct):
        return x / e
    return RationalFunction.of(x) / RationalFunction.of(e)


def _accumulate(values):
    """Exact sum; factored terms sharing the same factors are combined first."""
    groups: dict = {}
    rest = None
    like = None
    for v in values:
        if isinstance(v, LinearProduct):
            like = v
            if v.is_zero():
                continue
            groups[v.factors] = groups.get(v.factors, 0) + v.coeff
        else:
            v = RationalFunction.of(v)
            rest = v if rest is None else rest + v
    if rest is None and like is not None:
        live = [(f, c) for f, c in groups.items() if c]
        if len(live) <= 1:
            f, c = live[0] if live else ((), 0)
            return LinearProduct(like.var_class, like.rank, c, f)
    for f, c in groups.items():
        if c:
            t = LinearProduct(like.var_class, like.rank, c, f).to_rational()
            rest = t if rest is None else rest + t
    if rest is None:
        if like is None:
            raise ValueError("empty sum without a reference value")
        return LinearProduct(like.var_class, like.rank, 0)
    return rest


def _mul(x, y):
    if isinstance(x, LinearProduct) and isinstance(y, LinearProduct):
        return x * y
    return RationalFunction.of(x) * RationalFunction.of(y)


def _values_equal(x, y) -> bool:
    if isinstance(x, LinearProduct) and isinstance(y, LinearProduct):
        return x == y
    return RationalFunction.of(x) == RationalFunction.of(y)


def _z_as_u(p):
    if isinstance(p, LinearProduct):
        return LinearProduct("u", p.rank, p.coeff, p.factors)
    return relabel(p, "u")


# -- invariance -----------------------------------------------------------

def check_invariant(q, rs: RootSystem, S):
    """Raise NotInvariant naming the first simple reflection s_i (i in S) moving q."""
    W = weyl_group(rs)
    for i in sorted(_check_indices(rs, S)):
        s = W[W.simple(i)]
        if not _values_equal(weyl_act_poly(s, q), q):
            raise NotInvariant(f"polynomial is not invariant under s_{i}", reflection=i)


# -- fixed-point data -----------------------------------------------------

def restrict_GT(p, W: WeylGroup) -> EquivClassGT:
    """Fixed-point values of p(u, y): u_i -> u_i and y_i -> c1(w . chi_i) at w."""
    if isinstance(p, Polynomial) and p.var_class in ("u", "y"):
        p = embed_uy(p)
    if p.var_class != "uy":
        raise ValueError("restrict_GT takes a polynomial in u and y")
    if p.rank != W.rank:
        raise RankMismatch(f"rank {p.rank} class on rank {W.rank} group")
    values = []
    for w in W.elements:
        v = p.substitute(restriction_images(w), "u", W.rank)
        values.append(v if isinstance(v, LinearProduct) else RationalFunction(v))
    return EquivClassGT(W, values)


def euler_GT(rs: RootSystem, W: WeylGroup | None = None) -> EquivClassGT:
    """e_M(w) = w . prod_{alpha > 0} c1(S_alpha), checked against (-1)^w times the product."""
    W = W or weyl_group(rs)
    top = root_product_factored(rs, "u")
    values = []
    for w in W.elements:
        acted = weyl_act_poly(w, top)
        signed = top * w.sign
        if acted != signed:
            raise AssertionError(f"w.prod(roots) != (-1)^w prod(roots) at {w.reduced_word}")
        values.append(acted)
    return EquivClassGT(W, values)


def euler_GH(rs: RootSystem, cosets: CosetList) -> EquivClassGH:
    """e_N(w W_H) = w . prod over roots outside the parabolic subsystem."""
    W = cosets.group
    normal = parabolic_subsystem(rs, cosets.simple_indices).complement()
    base = root_product_factored(normal, "u", rs.rank)
    values = []
    for c, rep in enumerate(cosets.min_reps):
        v = weyl_act_poly(W[rep], base)
        other = cosets.members[c][-1]
        if other != rep and weyl_act_poly(W[other], base) != v:
            raise RepresentativeMismatch(f"e_N depends on the representative of coset {c}")
        values.append(v)
    return EquivClassGH(cosets, values)


def tangent_euler_class(rs: RootSystem, W: WeylGroup | None = None) -> EquivClassGT:
    """Restriction of prod_{alpha > 0} c1(K_alpha), kept factored."""
    W = W or weyl_group(rs)
    return restrict_GT(lift_factored_y(root_product_factored(rs, "y")), W)


def gkm_violations(a: EquivClassGT) -> list[tuple[int, tuple[int, ...]]]:
    """(element index, root) pairs where a(w) - a(s_alpha w) is not divisible by alpha."""
    W = a.group
    rs = W.root_system
    bad = []
    for k, w in enumerate(W.elements):
        x = _as_poly(a.values[k])
        for beta, refl in rs.root_reflections.items():
            j = W.index(matmul(refl, w.matrix))
            y = _as_poly(a.values[j])
            if x is None or y is None:
                continue
            if try_div(x - y, Polynomial.linear(beta, "u", rs.rank)) is None:
                bad.append((k, beta))
    return bad


# -- integration and pushforward -----------------------------------------

def abbv_integrate(a: EquivClassGT, euler: EquivClassGT | None = None):
    """Sum over fixed points of a(w) / e_M(w).

    When every value is polynomial the sum must be a polynomial; anything
    else means the input is not a restricted class.
    """
    W = a.group
    euler = euler or euler_GT(W.root_system, W)
    total = _accumulate(_quotient(x, e) for x, e in zip(a.values, euler.values))
    if all(_is_poly_value(v) for v in a.values):
        p = _as_poly(total)
        if p is None:
            raise NotPolynomialResult("localization sum is not a polynomial")
        return RationalFunction(p)
    return RationalFunction.of(total)


def relative_pushforward(a: EquivClassGT, cosets: CosetList,
                         euler_m: EquivClassGT | None = None,
                         euler_n: EquivClassGH | None = None) -> EquivClassGH:
    """Value at w W_H: e_N(w W_H) * sum_{v in W_H} a(wv) / e_M(wv)."""
    W = cosets.group
    if a.group is not W:
        raise RankMismatch("class and coset list come from different Weyl groups")
    rs = W.root_system
    euler_m = euler_m or euler_GT(rs, W)
    euler_n = euler_n or euler_GH(rs, cosets)
    out = []
    for c, members in enumerate(cosets.members):
        fiber = _accumulate(_quotient(a.values[k], euler_m.values[k]) for k in members)
        v = _mul(euler_n.values[c], fiber)
        if isinstance(v, RationalFunction):
            v = v.reduced()
        out.append(v)
    return EquivClassGH(cosets, out)


def invert_restriction(b: EquivClassGH) -> Polynomial:
    """The y-polynomial whose coset restrictions are b, verified at every coset."""
    cosets = b.cosets
    W = cosets.group
    if cosets.min_reps[0] != 0:
        raise AssertionError("first coset must be the identity coset")
    q = b.values[0]
    if isinstance(q, RationalFunction):
        q = q.as_polynomial()
        if q is None:
            raise NotInImage("value at the identity coset is not a polynomial")
    elif isinstance(q, LinearProduct) and not q.is_polynomial():
        raise NotInImage("value at the identity coset is not a polynomial")
    for c in range(1, len(cosets)):
        if not _values_equal(weyl_act_poly(W[cosets.min_reps[c]], q), b.values[c]):
            raise NotInImage(f"coset {c} value is not w . q(u)")
    if isinstance(q, LinearProduct):
        q = q.expand()
    return relabel(q, "y")


def integrate_GT(p, rs: RootSystem, W: WeylGroup | None = None):
    """Ordinary integral over G/T of a z-polynomial (or factored product)."""
    W = W or weyl_group(rs)
    if isinstance(p, LinearProduct):
        lift = lift_factored_y(LinearProduct("y", p.rank, p.coeff, p.factors))
    else:
        lift = embed_uy(relabel(p, "y"))
    total = abbv_integrate(restrict_GT(lift, W))
    return _at_zero(total.as_polynomial())


def integrate_GH(q, rs: RootSystem, S, W: WeylGroup | None = None):
    """Ordinary integral over G/H of a W_H-invariant z-polynomial."""
    W = W or weyl_group(rs)
    check_invariant(q, rs, S)
    cosets = W.cosets(_check_indices(rs, S))
    euler_n = euler_GH(rs, cosets)
    qu = _z_as_u(q)
    terms = (_quotient(weyl_act_poly(W[rep], qu), euler_n.values[c])
             for c, rep in enumerate(cosets.min_reps))
    total = _as_poly(_accumulate(terms))
    if total is None:
        raise NotPolynomialResult("localization sum over W_G/W_H is not a polynomial")
    return _at_zero(total)


def _at_zero(p: Polynomial):
    c = p.constant_term()
    return c if isinstance(c, Fraction) else int(c)


def pullback_GH_to_GT(q, rs: RootSystem, S):
    """f^*: W_H-invariant representatives are kept as they are."""
    check_invariant(q, rs, S)
    return q


def euler_characteristic_GT(rs: RootSystem, W: WeylGroup | None = None):
    W = W or weyl_group(rs)
    total = abbv_integrate(tangent_euler_class(rs, W), euler_GT(rs, W))
    return _at_zero(total.as_polynomial())


def euler_characteristic_GH(rs: RootSystem, S, W: WeylGroup | None = None):
    normal = parabolic_subsystem(rs, S).complement()
    return integrate_GH(root_product_factored(normal, "z", rs.rank), rs, S, W)


# -- the three Gysin routes ----------------------------------------------

def _expanded(p):
    return p.expand() if isinstance(p, LinearProduct) else p


def gysin_closed_form(p, rs: RootSystem, S, W: WeylGroup | None = None) -> GysinResult:
    """Signed W_H-symmetrization of p divided by prod_{alpha in Delta+(H)} c1(L_alpha)."""
    W = W or weyl_group(rs)
    S = _check_indices(rs, S)
    sub = [W[k] for k in W.subgroup(S)]
    hroots = parabolic_subsystem(rs, S)
    if isinstance(p, LinearProduct):
        denom = root_product_factored(hroots, "z")
    else:
        denom = root_product(hroots, "z")
    result = exact_div(antisymmetrize(p, sub), denom)
    check_invariant(result, rs, S)

    # same map written as sum_v v.(p / denom)
    if len(sub) > SYMMETRIZED_CHECK_LIMIT:
        return GysinResult(_expanded(result), "closed_form")
    if isinstance(p, LinearProduct):
        sym = _accumulate(weyl_act_poly(v, p / denom) for v in sub)
    else:
        sym = symmetrize_sum(RationalFunction(p, denom), sub)
    if not _values_equal(sym, result):
        raise AssertionError("symmetrized and antisymmetrized closed forms differ")
    return GysinResult(_expanded(result), "closed_form")


def tautological_lift(p):
    """p(z) -> p(y) inside Q[u, y]."""
    if isinstance(p, LinearProduct):
        return lift_factored_y(LinearProduct("y", p.rank, p.coeff, p.factors))
    return embed_uy(relabel(p, "y"))


def gysin_via_localization(p, rs: RootSystem, S, W: WeylGroup | None = None,
                           lift=None) -> GysinResult:
    """Restrict an equivariant lift, push forward fixed-point-wise, invert i_N^*, set u = 0."""
    W = W or weyl_group(rs)
    S = _check_indices(rs, S)
    lift = tautological_lift(p) if lift is None else lift
    a = restrict_GT(lift, W)
    cosets = W.cosets(S)
    b = relative_pushforward(a, cosets)
    q = invert_restriction(b)
    return GysinResult(substitute_zero_u(q), "localization", intermediate=b)


def gysin_demazure_oracle(p, rs: RootSystem, S, W: WeylGroup | None = None,
                          word=None) -> GysinResult:
    """Divided differences along a reduced word of the longest element of W_H."""
    W = W or weyl_group(rs)
    S = _check_indices(rs, S)
    if word is None:
        try:
            word = longest_element(W, S).reduced_word
        except EmptySubset:
            word = ()
    return GysinResult(demazure_compose(_expanded(p), word, rs), "demazure_oracle")


_ROUTE_FUNCS = {
    "closed_form": gysin_closed_form,
    "localization": gysin_via_localization,
    "demazure_oracle": gysin_demazure_oracle,
}


def gysin(p, rs: RootSystem, S, route: str = "closed_form", W: WeylGroup | None = None):
    """Run one route, or all three with route='all' (raises RouteDisagreement)."""
    if route != "all":
        return _ROUTE_FUNCS[route](p, rs, S, W)
    results = [_ROUTE_FUNCS[r](p, rs, S, W) for r in ROUTES]
    first = results[0].result
    for r in results[1:]:
        if r.result != first:
            raise RouteDisagreement(
                f"{r.route} gave {r.result}, closed_form gave {first}")
    return results[0]


def quadratic_invariant(rs: RootSystem, var_class: str = "z") -> Polynomial:
    """sum over positive roots of c1(alpha)^2, a W_G-invariant of degree 2."""
    total = Polynomial.zero(var_class, rs.rank)
    for a in rs.positive_roots:
        lin = Polynomial.linear(a, var_class, rs.rank)
        total = total + lin * lin
    return total
