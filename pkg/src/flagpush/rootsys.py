"""Root systems of the crystallographic Cartan types.

Weights are tuples of integers in the fundamental-weight basis.  The simple
root alpha_j is column j of the Cartan matrix, i.e. ``C[i][j] = <alpha_j, alpha_i^v>``,
and the simple reflection is ``s_i(lam) = lam - lam[i] * alpha_i``.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from math import factorial

from ._intmat import Matrix, identity, matmul
from .errors import IndexOutOfRange, InvalidCartanType, RankMismatch, SizeGuardExceeded

Weight = tuple[int, ...]

DEFAULT_SIZE_GUARD = 51840
SIZE_GUARD_ENV = "FLAGPUSH_SIZE_GUARD"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"G": (2,), "F": (4,), "E": (6, 7, 8)}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if not isinstance(n, int) or n < 1:
            raise InvalidCartanType(f"invalid Cartan type {s}{n}: bad rank")
        if s in _MIN_RANK:
            ok = n >= _MIN_RANK[s]
        elif s in _FIXED_RANKS:
            ok = n in _FIXED_RANKS[s]
        else:
            raise InvalidCartanType(f"invalid Cartan type {s}{n}: unknown series")
        if not ok:
            raise InvalidCartanType(f"invalid Cartan type {s}{n}: rank out of range")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> CartanType:
        m = re.fullmatch(r"\s*([A-Za-z])(\d+)\s*", text or "")
        if not m:
            raise InvalidCartanType(f"invalid Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def weyl_order(self) -> int:
        s, n = self.series, self.rank
        if s == "A":
            return factorial(n + 1)
        if s in "BC":
            return 2**n * factorial(n)
        if s == "D":
            return 2 ** (n - 1) * factorial(n)
        return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840,
                ("E", 7): 2903040, ("E", 8): 696729600}[(s, n)]

    def positive_root_count(self) -> int:
        s, n = self.series, self.rank
        if s == "A":
            return n * (n + 1) // 2
        if s in "BC":
            return n * n
        if s == "D":
            return n * (n - 1)
        return {("G", 2): 6, ("F", 4): 24, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}[(s, n)]


def as_cartan_type(t) -> CartanType:
    return t if isinstance(t, CartanType) else CartanType.parse(str(t))


def cartan_matrix(t: CartanType) -> Matrix:
    n = t.rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, a_ij=-1, a_ji=-1):
        # 1-based simple indices
        c[i - 1][j - 1] = a_ij
        c[j - 1][i - 1] = a_ji

    s = t.series
    if s in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if s == "B":
            link(n, n - 1, -2, -1)
        elif s == "C":
            link(n - 1, n, -2, -1)
    elif s == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif s == "G":
        link(1, 2, -3, -1)
    elif s == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif s == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    return tuple(tuple(row) for row in c)


def size_guard_limit() -> int:
    raw = os.environ.get(SIZE_GUARD_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_SIZE_GUARD


def check_size_guard(t: CartanType, override: bool = False, limit: int | None = None):
    if override:
        return
    limit = size_guard_limit() if limit is None else limit
    if t.weyl_order() > limit:
        raise SizeGuardExceeded(
            f"|W({t})| = {t.weyl_order()} exceeds the size guard {limit}; "
            f"pass an explicit override or raise {SIZE_GUARD_ENV}")


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: Matrix
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    simple_reflection_matrices: tuple[Matrix, ...]
    # simple-root coefficients of each positive root
    root_coefficients: dict = field(repr=False, compare=False)
    # reflection matrix s_beta for each positive root beta
    root_reflections: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def height(self, root: Weight) -> int:
        return sum(self.root_coefficients[root])

    def is_positive_root(self, lam: Weight) -> bool:
        return tuple(lam) in self.root_coefficients


@dataclass(frozen=True)
class RootSubset:
    parent: RootSystem
    simple_indices: frozenset
    roots: tuple[Weight, ...]

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def complement(self) -> tuple[Weight, ...]:
        """Positive roots of the parent not in this subset."""
        mine = set(self.roots)
        return tuple(r for r in self.parent.positive_roots if r not in mine)


def _simple_reflection_matrix(c: Matrix, i: int) -> Matrix:
    # columns are images of the fundamental weights: s_i(w_j) = w_j - delta_ij alpha_i
    n = len(c)
    m = [list(row) for row in identity(n)]
    for r in range(n):
        m[r][i] -= c[r][i]
    return tuple(tuple(row) for row in m)


def _word_matrix(mats, word) -> Matrix:
    n = len(mats[0])
    m = identity(n)
    for i in word:
        m = matmul(m, mats[i])
    return m


def build_root_system(t, *, override: bool = False, size_guard: int | None = None) -> RootSystem:
    """Close the simple roots under simple reflections and keep the positive ones."""
    t = as_cartan_type(t)
    check_size_guard(t, override, size_guard)
    c = cartan_matrix(t)
    n = t.rank
    simple = tuple(tuple(c[i][j] for i in range(n)) for j in range(n))
    mats = tuple(_simple_reflection_matrix(c, i) for i in range(n))

    # state: simple-root coefficients -> (word, i) with root = word(alpha_i)
    seen: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    frontier = []
    for i in range(n):
        k = tuple(1 if j == i else 0 for j in range(n))
        seen[k] = ((), i)
        frontier.append(k)
    while frontier:
        nxt = []
        for k in frontier:
            lam = tuple(sum(c[r][j] * k[j] for j in range(n)) for r in range(n))
            word, i0 = seen[k]
            for j in range(n):
                if lam[j] == 0:
                    continue
                k2 = tuple(k[r] - (lam[j] if r == j else 0) for r in range(n))
                # every positive root is reachable through positive roots only
                if k2 in seen or any(x < 0 for x in k2):
                    continue
                seen[k2] = ((j,) + word, i0)
                nxt.append(k2)
        frontier = nxt

    order = sorted(seen, key=lambda k: (sum(k), tuple(-x for x in k)))
    positive = []
    coeffs = {}
    reflections = {}
    for k in order:
        lam = tuple(sum(c[r][j] * k[j] for j in range(n)) for r in range(n))
        positive.append(lam)
        coeffs[lam] = k
        word, i0 = seen[k]
        reflections[lam] = _word_matrix(mats, word + (i0,) + word[::-1])
    rs = RootSystem(t, c, simple, tuple(positive), mats, coeffs, reflections)
    if len(rs.positive_roots) != t.positive_root_count():
        raise AssertionError(f"root closure for {t} produced {len(positive)} roots")
    return rs


def _check_indices(rs: RootSystem, indices) -> frozenset:
    out = frozenset(indices)
    for i in out:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"simple index {i} outside 1..{rs.rank}")
    return out


def parabolic_subsystem(rs: RootSystem, S) -> RootSubset:
    """Positive roots lying in the span of the simple roots indexed by S (1-based)."""
    S = _check_indices(rs, S)
    outside = [j for j in range(rs.rank) if j + 1 not in S]
    roots = tuple(r for r in rs.positive_roots
                  if all(rs.root_coefficients[r][j] == 0 for j in outside))
    return RootSubset(rs, S, roots)


def reflect(rs: RootSystem, i: int, lam) -> Weight:
    """s_i(lam) for the 1-based simple index i."""
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple index {i} outside 1..{rs.rank}")
    if len(lam) != rs.rank:
        raise RankMismatch(f"weight of length {len(lam)} for rank {rs.rank}")
    a = rs.simple_roots[i - 1]
    li = lam[i - 1]
    return tuple(x - li * y for x, y in zip(lam, a))
