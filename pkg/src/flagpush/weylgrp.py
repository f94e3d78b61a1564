"""Weyl group enumeration, parabolic subgroups and minimal coset representatives."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ._intmat import Matrix, det, identity, matmul, matvec
from .errors import EmptySubset, IndexOutOfRange, RankMismatch
from .rootsys import RootSystem, _check_indices, check_size_guard


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W acting on weight coordinates by ``matrix @ lam``.

    Equality and hashing use the matrix only; words are not unique.
    """

    matrix: Matrix
    length: int
    reduced_word: tuple[int, ...]
    root_system: RootSystem = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __call__(self, lam):
        return act_on_weight(self, lam)


class WeylGroup:
    """All elements of W(rs), identity first, ordered by (length, matrix entries)."""

    def __init__(self, root_system: RootSystem, elements: list[WeylElement]):
        self.root_system = root_system
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self._index = {w.matrix: k for k, w in enumerate(self.elements)}
        self._memo: dict = {}

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k) -> WeylElement:
        return self.elements[k]

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def index(self, w) -> int:
        m = w.matrix if isinstance(w, WeylElement) else w
        return self._index[m]

    def mul(self, a: int, b: int) -> int:
        """Index of elements[a] * elements[b]."""
        return self._index[matmul(self.elements[a].matrix, self.elements[b].matrix)]

    def simple(self, i: int) -> int:
        return self._index[self.root_system.simple_reflection_matrices[i - 1]]

    def from_word(self, word) -> WeylElement:
        m = identity(self.rank)
        for i in word:
            m = matmul(m, self.root_system.simple_reflection_matrices[i - 1])
        return self.elements[self._index[m]]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self._index[self.from_word(w.reduced_word[::-1]).matrix]
                     for w in self.elements)

    def subgroup(self, S) -> tuple[int, ...]:
        key = ("sub", frozenset(S))
        if key not in self._memo:
            self._memo[key] = tuple(parabolic_subgroup(self, S))
        return self._memo[key]

    def cosets(self, S) -> CosetList:
        key = ("cos", frozenset(S))
        if key not in self._memo:
            self._memo[key] = coset_reps(self, S)
        return self._memo[key]

    def reduced_words(self, k: int) -> list[tuple[int, ...]]:
        """Every reduced word of elements[k], in lexicographic order."""
        memo: dict[int, list[tuple[int, ...]]] = {0: [()]}

        def words(j):
            if j in memo:
                return memo[j]
            w = self.elements[j]
            out = []
            for i in range(1, self.rank + 1):
                j2 = self.mul(j, self.simple(i))
                if self.elements[j2].length < w.length:
                    out.extend(x + (i,) for x in words(j2))
            memo[j] = sorted(out)
            return memo[j]

        return words(k)

    def random_reduced_word(self, k: int, rng) -> tuple[int, ...]:
        """A reduced word built by peeling random right descents."""
        word = []
        j = k
        while self.elements[j].length:
            descents = [i for i in range(1, self.rank + 1)
                        if self.elements[self.mul(j, self.simple(i))].length
                        < self.elements[j].length]
            i = rng.choice(descents)
            word.append(i)
            j = self.mul(j, self.simple(i))
        return tuple(reversed(word))


def enumerate_weyl(rs: RootSystem, *, override: bool = False,
                   size_guard: int | None = None) -> WeylGroup:
    """Breadth-first closure from the identity under left multiplication by s_i.

    Elements are keyed by their image of rho = (1, ..., 1), on which W acts freely.
    """
    check_size_guard(rs.cartan_type, override, size_guard)
    n = rs.rank
    alphas = rs.simple_roots
    rho = (1,) * n
    seen = {rho}
    level = [(identity(n), (), rho)]
    depth = 0
    found = []
    while level:
        level.sort(key=lambda e: sum(e[0], ()))
        found.extend((m, word, depth) for m, word, _ in level)
        nxt = []
        for m, word, v in level:
            for i in range(n):
                a = alphas[i]
                vi = v[i]
                v2 = tuple(x - vi * y for x, y in zip(v, a))
                if v2 in seen:
                    continue
                seen.add(v2)
                row = m[i]
                m2 = tuple(tuple(x - a[r] * y for x, y in zip(m[r], row)) for r in range(n))
                nxt.append((m2, (i + 1,) + word, v2))
        level = nxt
        depth += 1
    elements = [WeylElement(m, d, word, rs) for m, word, d in found]
    return WeylGroup(rs, elements)


_GROUPS: dict = {}


def weyl_group(rs: RootSystem, *, override: bool = False) -> WeylGroup:
    """Memoized enumerate_weyl."""
    W = _GROUPS.get(rs)
    if W is None:
        W = _GROUPS[rs] = enumerate_weyl(rs, override=override)
    return W


def act_on_weight(w: WeylElement, lam) -> tuple[int, ...]:
    if len(lam) != len(w.matrix):
        raise RankMismatch(f"weight of length {len(lam)} for rank {len(w.matrix)}")
    return matvec(w.matrix, lam)


def length_and_sign(w: WeylElement) -> tuple[int, int]:
    """Length as the number of positive roots sent negative; sign = (-1)^length."""
    rs = w.root_system
    length = sum(1 for b in rs.positive_roots
                 if not rs.is_positive_root(matvec(w.matrix, b)))
    sign = -1 if length % 2 else 1
    if det(w.matrix) != sign:
        raise AssertionError(f"det {det(w.matrix)} disagrees with (-1)^{length}")
    return length, sign


def parabolic_subgroup(W: WeylGroup, S) -> list[int]:
    """Indices (sorted) of the subgroup generated by s_i for i in S."""
    S = _check_indices(W.root_system, S)
    gens = [W.simple(i) for i in sorted(S)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for k in frontier:
            for g in gens:
                k2 = W.mul(k, g)
                if k2 not in seen:
                    seen.add(k2)
                    nxt.append(k2)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class CosetList:
    """Left cosets w W_H, each with its minimal-length representative.

    ``members[c][k]`` is the index of ``min_reps[c] * subgroup[k]``.
    """

    group: WeylGroup
    simple_indices: frozenset
    subgroup_indices: tuple[int, ...]
    min_reps: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.min_reps)

    def rep(self, c: int) -> WeylElement:
        return self.group.elements[self.min_reps[c]]


def coset_reps(W: WeylGroup, S) -> CosetList:
    S = _check_indices(W.root_system, S)
    sub = tuple(parabolic_subgroup(W, S))
    coset_of = [-1] * W.order
    reps, members = [], []
    # elements are sorted by length, so the first unassigned one is minimal
    for k in range(W.order):
        if coset_of[k] >= 0:
            continue
        mem = tuple(W.mul(k, v) for v in sub)
        for j in mem:
            coset_of[j] = len(reps)
        reps.append(k)
        members.append(mem)
    return CosetList(W, S, sub, tuple(reps), tuple(members), tuple(coset_of))


def longest_element(W: WeylGroup, S) -> WeylElement:
    S = _check_indices(W.root_system, S)
    if not S:
        raise EmptySubset("longest element needs a nonempty set of simple indices")
    sub = parabolic_subgroup(W, S)
    best = max(sub, key=lambda k: (W.elements[k].length, -k))
    return W.elements[best]


def check_index(W: WeylGroup, i: int):
    if not 1 <= i <= W.rank:
        raise IndexOutOfRange(f"simple index {i} outside 1..{W.rank}")
