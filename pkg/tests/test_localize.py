import random
from fractions import Fraction

import pytest

from flagpush.errors import NotInImage, NotInvariant, NotPolynomialResult, RouteDisagreement
from flagpush.localize import (EquivClassGH, EquivClassGT, ROUTES, abbv_integrate,
                               check_invariant, euler_characteristic_GH,
                               euler_characteristic_GT, euler_GH, euler_GT, gkm_violations,
                               gysin, gysin_closed_form, gysin_demazure_oracle,
                               gysin_via_localization, integrate_GH, integrate_GT,
                               invert_restriction, pullback_GH_to_GT, relative_pushforward,
                               restrict_GT, tangent_euler_class)
from flagpush.polyring import (LinearProduct, RationalFunction, char_to_linear, embed_uy,
                               parse_poly, relabel, root_product, root_product_factored)
from flagpush.rootsys import parabolic_subsystem
from flagpush.verify import random_poly


def z(text, rank=2):
    return parse_poly(text, rank, "z")


def uy(text, rank):
    return parse_poly(text, rank, "uy")


def u(text, rank=2):
    return parse_poly(text, rank, "u")


def values_as_rf(cls):
    return [RationalFunction.of(v) for v in cls.values]


def test_restrict_a1(systems):
    _, W = systems("A1")
    vals = values_as_rf(restrict_GT(uy("y1", 1), W))
    assert vals[0] == u("u1", 1) and vals[1] == u("-u1", 1)
    assert all(v == u("u1", 1) for v in values_as_rf(restrict_GT(uy("u1", 1), W)))
    assert all(v == 1 for v in values_as_rf(restrict_GT(uy("1", 1), W)))


def test_restrict_matches_weyl_action(systems):
    from flagpush.polyring import weyl_act_poly
    rs, W = systems("B2")
    p = z("z1^2*z2 - 3*z2 + 1")
    a = restrict_GT(embed_uy(relabel(p, "y")), W)
    for w, v in zip(W.elements, a.values):
        assert v == RationalFunction(weyl_act_poly(w, relabel(p, "u")))


def test_euler_gt(systems):
    rs, W = systems("A1")
    e = euler_GT(rs, W)
    assert e.values[0].expand() == u("2*u1", 1)
    assert e.values[1].expand() == u("-2*u1", 1)
    rs, W = systems("A2")
    e = euler_GT(rs, W)
    w0 = W.index(max(W.elements, key=lambda w: w.length))
    assert e.values[w0].expand() == -u("(2*u1-u2)*(-u1+2*u2)*(u1+u2)")


def test_euler_gh(systems):
    rs, W = systems("A2")
    cl = W.cosets({1})
    e = euler_GH(rs, cl)
    assert e.values[0].expand() == u("(-u1+2*u2)*(u1+u2)")
    full = euler_GH(rs, W.cosets({1, 2}))
    assert len(full.values) == 1 and full.values[0] == 1
    empty = euler_GH(rs, W.cosets(set()))
    gt = euler_GT(rs, W)
    for c, rep in enumerate(W.cosets(set()).min_reps):
        assert empty.values[c] == gt.values[rep]


def test_abbv_examples(systems):
    rs, W = systems("A1")
    assert abbv_integrate(restrict_GT(uy("2*y1", 1), W)) == 2
    assert abbv_integrate(restrict_GT(uy("1", 1), W)).is_zero()
    rs, W = systems("A2")
    top = embed_uy(root_product(rs, "y"))
    assert abbv_integrate(restrict_GT(top, W)) == 6


def test_abbv_equivariant_value(systems):
    # degree above the dimension leaves a polynomial in u
    rs, W = systems("A1")
    out = abbv_integrate(restrict_GT(uy("y1^3", 1), W))
    assert out == u("u1^2", 1)


def test_abbv_rejects_non_class(systems):
    rs, W = systems("A1")
    bogus = EquivClassGT(W, [RationalFunction(u("1", 1)), RationalFunction(u("u1", 1))])
    with pytest.raises(NotPolynomialResult):
        abbv_integrate(bogus)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2"])
def test_euler_characteristic_gt(systems, name):
    rs, W = systems(name)
    assert euler_characteristic_GT(rs, W) == W.order


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_euler_characteristic_gh(systems, name):
    rs, W = systems(name)
    for k in range(rs.rank + 1):
        S = set(range(k + 1, rs.rank + 1))
        assert euler_characteristic_GH(rs, S, W) == W.order // len(W.subgroup(S))


def test_relative_pushforward_example(systems):
    rs, W = systems("A2")
    cl = W.cosets({1})
    a = restrict_GT(embed_uy(char_to_linear((2, -1), "y")), W)
    b = relative_pushforward(a, cl)
    assert all(RationalFunction.of(v) == 2 for v in b.values)
    assert invert_restriction(b) == parse_poly("2", 2, "y")
    zero = relative_pushforward(restrict_GT(uy("1", 2), W), cl)
    assert all(RationalFunction.of(v).is_zero() for v in zero.values)


def test_relative_pushforward_trivial_subgroup(systems):
    rs, W = systems("A2")
    cl = W.cosets(set())
    a = restrict_GT(uy("y1^2 - u2*y1", 2), W)
    b = relative_pushforward(a, cl)
    for c, rep in enumerate(cl.min_reps):
        assert RationalFunction.of(b.values[c]) == RationalFunction.of(a.values[rep])


def test_invert_restriction_round_trip(systems):
    rs, W = systems("A2")
    S = {1}
    cl = W.cosets(S)
    q = z("(-z1+2*z2)*(z1+z2) + 3")
    from flagpush.polyring import weyl_act_poly
    b = EquivClassGH(cl, [RationalFunction(weyl_act_poly(W[r], relabel(q, "u")))
                          for r in cl.min_reps])
    assert invert_restriction(b) == relabel(q, "y")
    const = EquivClassGH(cl, [RationalFunction(u("5"))] * len(cl))
    assert invert_restriction(const) == 5


def test_invert_restriction_not_in_image(systems):
    rs, W = systems("A2")
    cl = W.cosets({1})
    vals = [RationalFunction(u("u1"))] * len(cl)
    with pytest.raises(NotInImage):
        invert_restriction(EquivClassGH(cl, vals))
    vals = [RationalFunction(u("1"), u("u1"))] * len(cl)
    with pytest.raises(NotInImage):
        invert_restriction(EquivClassGH(cl, vals))


WORKED = [("A1", {1}, "z1", 1), ("A2", {1}, "2*z1 - z2", 2), ("A2", {1}, "1", 0),
          ("A2", {2}, "1", 0), ("B2", {1, 2}, "1", 0)]


@pytest.mark.parametrize("name,S,text,expected", WORKED)
@pytest.mark.parametrize("route", ROUTES)
def test_worked_instances(systems, name, S, text, expected, route):
    rs, W = systems(name)
    p = parse_poly(text, rs.rank)
    assert gysin(p, rs, S, route, W).result == expected


def test_empty_subset_is_identity(systems):
    rs, W = systems("B2")
    p = z("z1^3 - 2*z2 + 7")
    for route in ROUTES:
        assert gysin(p, rs, set(), route, W).result == p


def test_demazure_words_a2(systems):
    rs, W = systems("A2")
    p = z("z1^2*z2 - 5*z2^3 + z1^3")
    expected = gysin_closed_form(p, rs, {1, 2}, W).result
    for word in [(1, 2, 1), (2, 1, 2)]:
        assert gysin_demazure_oracle(p, rs, {1, 2}, W, word=word).result == expected


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2"])
def test_routes_agree_random(systems, name):
    rs, W = systems(name)
    rng = random.Random(11)
    for k in range(1, rs.rank + 1):
        S = set(range(1, k + 1))
        for _ in range(4):
            p = random_poly(rng, rs.rank, 5)
            gysin(p, rs, S, "all", W)


def test_route_all_raises_on_disagreement(systems, monkeypatch):
    from flagpush import localize
    rs, W = systems("A2")

    def broken(p, rs, S, W=None):
        return localize.GysinResult(p, "closed_form")
    monkeypatch.setitem(localize._ROUTE_FUNCS, "closed_form", broken)
    with pytest.raises(RouteDisagreement):
        gysin(z("z1"), rs, {1}, "all", W)


def test_factored_input(systems):
    rs, W = systems("B3")
    for S in [{1}, {2, 3}, {1, 2, 3}]:
        hroots = parabolic_subsystem(rs, S)
        lp = root_product_factored(hroots, "z")
        out = gysin_closed_form(lp, rs, S, W).result
        assert out == len(W.subgroup(S))
        assert gysin_via_localization(lp.expand(), rs, S, W).result == out


def test_integrate_gt(systems):
    rs, W = systems("A2")
    assert integrate_GT(z("(2*z1-z2)*(-z1+2*z2)*(z1+z2)"), rs, W) == 6
    rs1, W1 = systems("A1")
    assert integrate_GT(parse_poly("z1", 1), rs1, W1) == 1
    assert integrate_GT(parse_poly("1", 1), rs1, W1) == 0
    # wrong degree integrates to zero
    assert integrate_GT(z("z1^4"), rs, W) == 0


def test_integrate_gh(systems):
    rs, W = systems("A2")
    normal = parabolic_subsystem(rs, {1}).complement()
    assert integrate_GH(root_product(normal, "z", 2), rs, {1}, W) == 3
    assert integrate_GH(z("1"), rs, {1}, W) == 0
    assert integrate_GH(z("7"), rs, {1, 2}, W) == 7
    assert integrate_GH(z("1/2"), rs, {1, 2}, W) == Fraction(1, 2)


def test_pullback_and_invariance(systems):
    rs, W = systems("A2")
    q = z("(-z1+2*z2)*(z1+z2)")
    assert pullback_GH_to_GT(q, rs, {1}) == q
    assert pullback_GH_to_GT(z("4"), rs, {1}) == 4
    with pytest.raises(NotInvariant) as err:
        pullback_GH_to_GT(z("z1"), rs, {1})
    assert err.value.reflection == 1
    with pytest.raises(NotInvariant) as err:
        check_invariant(z("(-z1+2*z2)*(z1+z2)"), rs, {1, 2})
    assert err.value.reflection == 2


def test_tangent_euler_class_gkm(systems):
    rs, W = systems("B2")
    t = tangent_euler_class(rs, W)
    assert all(isinstance(v, LinearProduct) for v in t.values)
    assert gkm_violations(t) == []


def test_gkm_detects_bad_class(systems):
    rs, W = systems("A1")
    bad = EquivClassGT(W, [RationalFunction(u("u1", 1)), RationalFunction(u("u1 + 1", 1))])
    assert gkm_violations(bad) == [(0, (2,)), (1, (2,))]
