"""The affine Weyl group ``Q^vee x| W`` and its simply transitive action on
alcoves.

An element ``(lam, w)`` is the affine map ``x -> w(x) + lam`` on the coroot
space, written ``t_lam w``. The fundamental alcove is
``A0 = {x : <x, alpha_i> > 0, <x, theta> < 1}``, so every alcove is ``x.A0``
for exactly one element x, and elements double as alcove labels. Generator
0 is ``s_0 = t_{theta^vee} s_theta``; generators 1..n are the finite simple
reflections.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from alcove_orbits.cartan import RootDatum
from alcove_orbits.config import DEFAULT_BUDGETS, AlcoveOrbitsError, BudgetExceeded
from alcove_orbits.weyl_finite import (
    WeylElement,
    WeylGroup,
    finite_group,
    mat_vec,
    root_reflection_matrix,
)

Vector = tuple[int, ...]
Point = tuple[Fraction, ...]


class WallError(AlcoveOrbitsError, ValueError):
    def __init__(self, root: Vector, level: int):
        self.root = root
        self.level = level
        super().__init__(f"point lies on the wall <x, {root}> = {level}")


@dataclass(frozen=True)
class AffineElement:
    translation: Vector
    finite: WeylElement

    def __repr__(self) -> str:
        return f"t{list(self.translation)}*w{list(self.finite.word)}"


@dataclass(frozen=True)
class Alcove:
    label: AffineElement
    sample_point: Point = field(compare=False)


@dataclass
class Ball:
    """Elements of length at most ``radius``, in BFS order (distance, then
    canonical word)."""

    radius: int
    elements: list[AffineElement]
    distance: dict[AffineElement, int]
    word: dict[AffineElement, tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[AffineElement]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.distance

    def within(self, r: int) -> list[AffineElement]:
        return [x for x in self.elements if self.distance[x] <= r]


def _solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


class AffineWeylGroup:
    def __init__(self, datum: RootDatum, finite: WeylGroup | None = None):
        self.datum = datum
        self.W = finite if finite is not None else finite_group(datum)
        n = datum.rank
        self.rank = n
        self.zero: Vector = (0,) * n
        self.identity = AffineElement(self.zero, self.W.identity)
        s_theta = self.W.element(
            root_reflection_matrix(datum.highest_coroot, datum.highest_root, datum)
        )
        self.generators: tuple[AffineElement, ...] = (
            AffineElement(tuple(datum.highest_coroot), s_theta),
        ) + tuple(AffineElement(self.zero, s) for s in self.W.generators)
        a = datum.cartan
        # positive roots as functionals on coroot coordinates
        self._root_functionals = [
            tuple(sum(a[i][j] * r[j] for j in range(n)) for i in range(n))
            for r in datum.positive_roots
        ]
        self._simple_functionals = [tuple(a[i][k] for i in range(n)) for k in range(n)]
        self._theta_functional = tuple(
            sum(a[i][j] * datum.highest_root[j] for j in range(n)) for i in range(n)
        )
        h = datum.coxeter_number
        # <x, alpha_i> = 1/(h+1) for every i
        self.base_point: Point = tuple(
            _solve([list(col) for col in zip(*a)], [Fraction(1, h + 1)] * n)
        )

    # -- arithmetic -------------------------------------------------------

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        wmu = mat_vec(x.finite.matrix, y.translation)
        return AffineElement(
            tuple(a + b for a, b in zip(x.translation, wmu)), self.W.mul(x.finite, y.finite)
        )

    def inv(self, x: AffineElement) -> AffineElement:
        winv = self.W.inv(x.finite)
        return AffineElement(tuple(-c for c in mat_vec(winv.matrix, x.translation)), winv)

    def conjugate(self, g: AffineElement, x: AffineElement) -> AffineElement:
        """``g x g^{-1}``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def from_word(self, word: Sequence[int]) -> AffineElement:
        x = self.identity
        for i in word:
            x = self.mul(x, self.generators[i])
        return x

    def translation(self, lam: Sequence[int]) -> AffineElement:
        return AffineElement(tuple(lam), self.W.identity)

    def element(self, translation: Sequence[int], finite_word: Sequence[int] = ()) -> AffineElement:
        return AffineElement(tuple(translation), self.W.from_word(finite_word))

    def is_order_two(self, x: AffineElement) -> bool:
        """True when ``x^2 == 1`` (the identity included)."""
        return self.mul(x, x) == self.identity

    def apply(self, x: AffineElement, point: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(mat_vec(x.finite.matrix, point), x.translation))

    # -- length -----------------------------------------------------------

    def length(self, x: AffineElement) -> int:
        """Iwahori-Matsumoto length: count of affine walls between A0 and x.A0."""
        winv = self.W.inv(x.finite).matrix
        lam = x.translation
        total = 0
        for functional, coroot in zip(self._root_functionals, self.datum.positive_coroots):
            m = sum(c * f for c, f in zip(lam, functional))
            # w^{-1} alpha > 0 iff w^{-1} alpha^vee > 0
            image = mat_vec(winv, coroot)
            if any(c > 0 for c in image):
                total += abs(m)
            else:
                total += abs(m - 1)
        return total

    def reduced_word(self, x: AffineElement) -> tuple[int, ...]:
        """Lexicographically-least reduced word, by peeling the smallest left
        descent."""
        word = []
        ell = self.length(x)
        while ell:
            for i, s in enumerate(self.generators):
                y = self.mul(s, x)
                ly = self.length(y)
                if ly < ell:
                    word.append(i)
                    x, ell = y, ly
                    break
            else:  # pragma: no cover
                raise AssertionError("no descent found for an element of positive length")
        return tuple(word)

    # -- Cayley ball ------------------------------------------------------

    def ball(self, radius: int, budget: int | None = None) -> Ball:
        if radius < 0:
            raise AlcoveOrbitsError(f"radius must be non-negative, got {radius}")
        if budget is None:
            budget = DEFAULT_BUDGETS.ball
        distance = {self.identity: 0}
        word: dict[AffineElement, tuple[int, ...]] = {self.identity: ()}
        elements = [self.identity]
        level = [self.identity]
        for d in range(1, radius + 1):
            nxt = []
            # level is sorted by word, so first discovery is lex-least
            for x in level:
                for i, s in enumerate(self.generators):
                    y = self.mul(x, s)
                    if y not in distance:
                        distance[y] = d
                        word[y] = word[x] + (i,)
                        nxt.append(y)
                        elements.append(y)
                        if len(elements) > budget:
                            raise BudgetExceeded(
                                "ball", budget, f"{self.datum.name} at radius {d}"
                            )
            level = nxt
        return Ball(radius, elements, distance, word)

    # -- alcoves ----------------------------------------------------------

    def pair(self, point: Sequence, functional: Sequence) -> Fraction:
        return sum((Fraction(p) * f for p, f in zip(point, functional)), Fraction(0))

    def in_fundamental_alcove(self, point: Sequence) -> bool:
        return all(self.pair(point, f) > 0 for f in self._simple_functionals) and (
            self.pair(point, self._theta_functional) < 1
        )

    def alcove(self, x: AffineElement) -> Alcove:
        return Alcove(x, self.apply(x, self.base_point))

    def locate(self, point: Sequence) -> AffineElement:
        """The label x of the alcove containing ``point`` (so x^{-1}(point) is
        in A0). Points on a wall are rejected."""
        p = tuple(Fraction(c) for c in point)
        if len(p) != self.rank:
            raise AlcoveOrbitsError(f"point must have {self.rank} coordinates")
        for root, functional in zip(self.datum.positive_roots, self._root_functionals):
            v = self.pair(p, functional)
            if v.denominator == 1:
                raise WallError(root, int(v))
        word = []
        while True:
            for k, f in enumerate(self._simple_functionals):
                if self.pair(p, f) < 0:
                    p = self.apply(self.generators[k + 1], p)
                    word.append(k + 1)
                    break
            else:
                if self.pair(p, self._theta_functional) > 1:
                    p = self.apply(self.generators[0], p)
                    word.append(0)
                else:
                    break
        return self.from_word(word)

    def fundamental_vertices(self) -> list[Point]:
        """Vertices of A0: the origin and ``omega_i^vee / m_i``."""
        n = self.rank
        a = self.datum.cartan
        at = [list(col) for col in zip(*a)]
        verts = [tuple(Fraction(0) for _ in range(n))]
        for i, m in enumerate(self.datum.highest_root):
            rhs = [Fraction(int(j == i), m) for j in range(n)]
            verts.append(tuple(_solve(at, rhs)))
        return verts


@lru_cache(maxsize=None)
def affine_group(datum: RootDatum) -> AffineWeylGroup:
    return AffineWeylGroup(datum)


def affine_generators(datum: RootDatum) -> tuple[AffineElement, ...]:
    return affine_group(datum).generators


def im_length(x: AffineElement, datum: RootDatum) -> int:
    return affine_group(datum).length(x)


def ball(datum: RootDatum, radius: int, budget: int | None = None) -> Ball:
    return affine_group(datum).ball(radius, budget)


def locate(point: Sequence, datum: RootDatum) -> AffineElement:
    return affine_group(datum).locate(point)
