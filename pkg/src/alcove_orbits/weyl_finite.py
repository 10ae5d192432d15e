"""The finite Weyl group acting on simple-coroot coordinates.

Elements are integer matrices; simple reflections are numbered 1..n in words.
The whole group is enumerated once per datum and elements are interned, so
every element carries its lexicographically-least reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from alcove_orbits.cartan import RootDatum, weyl_group_order
from alcove_orbits.config import DEFAULT_BUDGETS, AlcoveOrbitsError, BudgetExceeded

Matrix = tuple[tuple[int, ...], ...]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...] = field(default=())
    index: int = -1
    _hash: int = field(default=0, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(self.matrix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._hash == other._hash and self.matrix == other.matrix

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, vector: Sequence) -> tuple:
        return mat_vec(self.matrix, vector)

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)


def reflection_matrix(i: int, datum: RootDatum) -> Matrix:
    """Matrix of ``s_i(lam) = lam - <lam, alpha_i> alpha_i^vee`` (i is 1-based)."""
    n = datum.rank
    if not 1 <= i <= n:
        raise AlcoveOrbitsError(f"simple reflection index {i} out of range 1..{n}")
    k = i - 1
    a = datum.cartan
    return tuple(
        tuple(int(r == c) - (a[c][k] if r == k else 0) for c in range(n)) for r in range(n)
    )


def root_reflection_matrix(coroot: Sequence[int], root: Sequence[int], datum: RootDatum) -> Matrix:
    """Matrix of ``s_alpha(lam) = lam - <lam, alpha> alpha^vee``."""
    n = datum.rank
    a = datum.cartan
    # <e_l, alpha> for each basis coroot e_l
    pair = [sum(a[l][j] * root[j] for j in range(n)) for l in range(n)]
    return tuple(tuple(int(r == c) - coroot[r] * pair[c] for c in range(n)) for r in range(n))


class FiniteClass(NamedTuple):
    representative: WeylElement
    members: frozenset


class WeylGroup:
    """Fully enumerated finite Weyl group of ``datum``."""

    def __init__(self, datum: RootDatum, budget: int | None = None):
        if budget is None:
            budget = DEFAULT_BUDGETS.finite_group
        order = weyl_group_order(datum.type_letter, datum.rank)
        if order > budget:
            raise BudgetExceeded(
                "finite_group", budget, f"|W({datum.name})| = {order}"
            )
        self.datum = datum
        n = datum.rank
        gens = [reflection_matrix(i, datum) for i in range(1, n + 1)]
        # column k of the Cartan matrix; x*s_k only changes columns of x
        cartan_cols = [tuple(datum.cartan[c][k] for c in range(n)) for k in range(n)]
        ident = WeylElement(identity_matrix(n), (), 0)
        self.elements: list[WeylElement] = [ident]
        self._by_matrix: dict[Matrix, WeylElement] = {ident.matrix: ident}
        level = [ident]
        # level lists stay sorted by word, so first discovery is the lex-least word
        while level:
            nxt = []
            for x in level:
                for k in range(n):
                    col = cartan_cols[k]
                    m = tuple(
                        tuple(v - row[k] * a for v, a in zip(row, col)) if row[k] else row
                        for row in x.matrix
                    )
                    i = k + 1
                    if m not in self._by_matrix:
                        y = WeylElement(m, x.word + (i,), len(self.elements))
                        self._by_matrix[m] = y
                        self.elements.append(y)
                        nxt.append(y)
                        if len(self.elements) > budget:
                            raise BudgetExceeded("finite_group", budget, datum.name)
            level = nxt
        if len(self.elements) != order:
            raise AssertionError(
                f"enumerated {len(self.elements)} elements of W({datum.name}), expected {order}"
            )
        self.identity = ident
        self.generators = tuple(self._by_matrix[g] for g in gens)
        self._inverse: dict[WeylElement, WeylElement] = {}
        self._classes: list[FiniteClass] | None = None
        self._conjugators: dict[WeylElement, dict[WeylElement, WeylElement]] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element(self, matrix: Matrix) -> WeylElement:
        try:
            return self._by_matrix[matrix]
        except KeyError:
            raise AlcoveOrbitsError(f"matrix {matrix} is not in W({self.datum.name})") from None

    def from_word(self, word: Sequence[int]) -> WeylElement:
        m = self.identity.matrix
        for i in word:
            m = mat_mul(m, self.generators[i - 1].matrix)
        return self.element(m)

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_matrix[mat_mul(a.matrix, b.matrix)]

    def inv(self, a: WeylElement) -> WeylElement:
        y = self._inverse.get(a)
        if y is None:
            # reversing a reduced word gives a word for the inverse
            y = self.from_word(tuple(reversed(a.word)))
            self._inverse[a] = y
            self._inverse[y] = self.element(a.matrix)
        return y

    def conjugate(self, v: WeylElement, w: WeylElement) -> WeylElement:
        """``v w v^{-1}``."""
        return self.mul(self.mul(v, w), self.inv(v))

    def is_involution(self, w: WeylElement) -> bool:
        return self.mul(w, w) is self.identity

    def involution_classes(self) -> list[FiniteClass]:
        if self._classes is None:
            invs = [w for w in self.elements if self.is_involution(w)]
            seen: set[WeylElement] = set()
            classes = []
            for w in invs:
                if w in seen:
                    continue
                orbit = {w}
                stack = [w]
                while stack:
                    u = stack.pop()
                    for s in self.generators:
                        c = self.mul(self.mul(s, u), s)
                        if c not in orbit:
                            orbit.add(c)
                            stack.append(c)
                seen |= orbit
                rep = min(orbit, key=WeylElement.sort_key)
                classes.append(FiniteClass(rep, frozenset(orbit)))
            classes.sort(key=lambda c: c.representative.sort_key())
            self._classes = classes
        return self._classes

    def centralizer(self, w: WeylElement) -> list[WeylElement]:
        return [v for v in self.elements if self.mul(v, w) == self.mul(w, v)]

    def conjugator_to(self, u: WeylElement, rep: WeylElement) -> WeylElement:
        """Some ``v`` with ``v u v^{-1} == rep``."""
        table = self._conjugators.get(rep)
        if table is None:
            # table[m] = g with g rep g^{-1} = m
            table = {rep: self.identity}
            stack = [rep]
            while stack:
                m = stack.pop()
                g = table[m]
                for s in self.generators:
                    c = self.mul(self.mul(s, m), s)
                    if c not in table:
                        table[c] = self.mul(s, g)
                        stack.append(c)
            self._conjugators[rep] = table
        if u not in table:
            raise AlcoveOrbitsError(f"{u.word} is not conjugate to {rep.word}")
        return self.inv(table[u])


@lru_cache(maxsize=None)
def finite_group(datum: RootDatum, budget: int | None = None) -> WeylGroup:
    return WeylGroup(datum, budget)


def simple_reflection(i: int, datum: RootDatum) -> WeylElement:
    m = reflection_matrix(i, datum)
    return WeylElement(m, (i,), -1)


def enumerate_group(datum: RootDatum, budget: int | None = None) -> frozenset[WeylElement]:
    return frozenset(finite_group(datum, budget).elements)


def finite_involution_classes(datum: RootDatum, budget: int | None = None) -> list[FiniteClass]:
    return finite_group(datum, budget).involution_classes()


def finite_centralizer(w: WeylElement, datum: RootDatum, budget: int | None = None) -> frozenset:
    group = finite_group(datum, budget)
    return frozenset(group.centralizer(group.element(w.matrix)))
