import pytest

from flagpush.errors import IndexOutOfRange, InvalidCartanType, RankMismatch, SizeGuardExceeded
from flagpush.rootsys import (CartanType, build_root_system, cartan_matrix, check_size_guard,
                              parabolic_subsystem, reflect, size_guard_limit)

ALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4",
             "D5", "G2", "F4", "E6"]


def test_parse_types():
    assert CartanType.parse("a2") == CartanType("A", 2)
    assert str(CartanType.parse(" F4 ")) == "F4"


@pytest.mark.parametrize("bad", ["Z9", "A0", "B1", "C1", "D2", "G3", "F5", "E5", "E9", "", "A", "2A"])
def test_invalid_types(bad):
    with pytest.raises(InvalidCartanType):
        CartanType.parse(bad)


def test_cartan_matrices():
    assert cartan_matrix(CartanType("A", 2)) == ((2, -1), (-1, 2))
    # B2: alpha_1 long, so <alpha_1, alpha_2^v> = -2 sits in row 2
    assert cartan_matrix(CartanType("B", 2)) == ((2, -1), (-2, 2))
    assert cartan_matrix(CartanType("C", 2)) == ((2, -2), (-1, 2))
    assert cartan_matrix(CartanType("G", 2)) == ((2, -3), (-1, 2))


def test_a1():
    rs = build_root_system("A1")
    assert rs.simple_roots == ((2,),)
    assert rs.positive_roots == ((2,),)


def test_a2_roots():
    rs = build_root_system("A2")
    assert set(rs.positive_roots) == {(2, -1), (-1, 2), (1, 1)}
    assert rs.positive_roots[:2] == rs.simple_roots


@pytest.mark.parametrize("name", ALL_TYPES)
def test_root_counts(name):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == rs.cartan_type.positive_root_count()
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4"])
def test_roots_closed_under_reflection(name):
    rs = build_root_system(name)
    roots = set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}
    for i in range(1, rs.rank + 1):
        for r in roots:
            assert reflect(rs, i, r) in roots


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_root_reflections_negate_their_root(name):
    from flagpush._intmat import matvec
    rs = build_root_system(name)
    for beta, m in rs.root_reflections.items():
        assert matvec(m, beta) == tuple(-x for x in beta)


def test_e8_highest_root_needs_override():
    with pytest.raises(SizeGuardExceeded):
        build_root_system("E8")
    rs = build_root_system("E8", override=True)
    assert len(rs.positive_roots) == 120
    assert rs.positive_roots[-1] == (0,) * 7 + (1,)


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("FLAGPUSH_SIZE_GUARD", "100")
    assert size_guard_limit() == 100
    with pytest.raises(SizeGuardExceeded):
        check_size_guard(CartanType("B", 4))
    check_size_guard(CartanType("B", 3))
    monkeypatch.setenv("FLAGPUSH_SIZE_GUARD", "10000000")
    build_root_system("E7")


def test_parabolic_subsystem():
    rs = build_root_system("A2")
    assert parabolic_subsystem(rs, {1}).roots == ((2, -1),)
    assert set(parabolic_subsystem(rs, {1, 2}).roots) == set(rs.positive_roots)
    assert parabolic_subsystem(rs, set()).roots == ()
    assert set(parabolic_subsystem(rs, {1}).complement()) == {(-1, 2), (1, 1)}
    with pytest.raises(IndexOutOfRange):
        parabolic_subsystem(rs, {3})
    with pytest.raises(IndexOutOfRange):
        parabolic_subsystem(rs, {0})


def test_reflect():
    a1 = build_root_system("A1")
    a2 = build_root_system("A2")
    assert reflect(a1, 1, (1,)) == (-1,)
    assert reflect(a2, 1, (2, -1)) == (-2, 1)
    assert reflect(a2, 1, (0, 1)) == (0, 1)
    with pytest.raises(IndexOutOfRange):
        reflect(a2, 3, (0, 1))
    with pytest.raises(RankMismatch):
        reflect(a2, 1, (0, 1, 0))


@pytest.mark.parametrize("name", ["B3", "G2", "F4"])
def test_reflect_is_involution(name):
    rs = build_root_system(name)
    lam = tuple(range(1, rs.rank + 1))
    for i in range(1, rs.rank + 1):
        assert reflect(rs, i, reflect(rs, i, lam)) == lam
