"""Irreducible reduced root systems with exact integer data.

Convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>``, Bourbaki numbering.
Roots are stored in simple-root coordinates, coroots in simple-coroot
coordinates. Indices are 0-based in code; the simple reflection ``s_{i+1}``
of the usual numbering is index ``i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from alcove_orbits.config import DEFAULT_BUDGETS, InvalidDatumError

Vector = tuple[int, ...]

TYPE_LETTERS = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}


def positive_root_count(type_letter: str, rank: int) -> int:
    n = rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, -1),
        "F": 24,
        "G": 6,
    }[type_letter]


def weyl_group_order(type_letter: str, rank: int) -> int:
    from math import factorial

    n = rank
    return {
        "A": factorial(n + 1),
        "B": 2**n * factorial(n),
        "C": 2**n * factorial(n),
        "D": 2 ** (n - 1) * factorial(n),
        "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n, -1),
        "F": 1152,
        "G": 12,
    }[type_letter]


def validate_type(type_letter: str, rank: int, max_rank: int | None = None) -> None:
    if max_rank is None:
        max_rank = DEFAULT_BUDGETS.max_rank
    if not isinstance(type_letter, str) or type_letter not in _MIN_RANK:
        raise InvalidDatumError(
            f"unknown type letter {type_letter!r}; expected one of {', '.join(TYPE_LETTERS)}"
        )
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidDatumError(f"rank must be an integer, got {rank!r}")
    lo = _MIN_RANK[type_letter]
    hi = _MAX_RANK.get(type_letter)
    if rank < lo:
        raise InvalidDatumError(f"type {type_letter} requires rank >= {lo}, got {rank}")
    if hi is not None and rank > hi:
        raise InvalidDatumError(f"type {type_letter} requires rank <= {hi}, got {rank}")
    if rank > max_rank:
        raise InvalidDatumError(f"rank {rank} exceeds the configured bound {max_rank}")


def cartan_matrix(type_letter: str, rank: int) -> tuple[Vector, ...]:
    """Cartan matrix with ``a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)``.

    Rows belonging to short simple roots carry the -2 / -3 entries.
    """
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i][j] = a_ij
        a[j][i] = a_ji

    if type_letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if type_letter == "B":
            # alpha_n short
            bond(n - 2, n - 1, -1, -2)
        elif type_letter == "C":
            # alpha_n long, the others short
            bond(n - 2, n - 1, -2, -1)
    elif type_letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif type_letter == "E":
        # 1-3-4-5-...-n with 2 hanging off 4
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif type_letter == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif type_letter == "G":
        # alpha_1 short, alpha_2 long
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootDatum:
    type_letter: str
    rank: int
    cartan: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    positive_coroots: tuple[Vector, ...]
    highest_root: Vector
    # coroot of the highest root (not the highest coroot of the dual system)
    highest_coroot: Vector

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def coxeter_number(self) -> int:
        return sum(self.highest_root) + 1

    def pair(self, coroot_vector: Sequence, root_vector: Sequence):
        """``<lambda, alpha>``; works for int or Fraction coordinates."""
        return pairing(coroot_vector, root_vector, self)

    def pair_simple(self, coroot_vector: Sequence) -> tuple:
        """``(<lambda, alpha_1>, ..., <lambda, alpha_n>)``."""
        n = self.rank
        a = self.cartan
        return tuple(sum(coroot_vector[k] * a[k][i] for k in range(n)) for i in range(n))

    def root_lengths(self) -> tuple[Fraction, ...]:
        """Squared lengths of the simple roots, long roots normalized to 2."""
        n = self.rank
        a = self.cartan
        d: list[Fraction | None] = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        top = max(d)
        return tuple(2 * x / top for x in d)

    def coroot_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """W-invariant inner products ``(alpha_i^vee, alpha_j^vee)``."""
        d = self.root_lengths()
        n = self.rank
        return tuple(
            tuple(Fraction(2 * self.cartan[i][j]) / d[j] for j in range(n)) for i in range(n)
        )


def pairing(coroot_vector: Sequence, root_vector: Sequence, datum: RootDatum):
    n = datum.rank
    if len(coroot_vector) != n or len(root_vector) != n:
        raise InvalidDatumError(
            f"dimension mismatch: expected vectors of length {n}, got "
            f"{len(coroot_vector)} and {len(root_vector)}"
        )
    a = datum.cartan
    return sum(
        coroot_vector[i] * a[i][j] * root_vector[j]
        for i in range(n)
        if coroot_vector[i]
        for j in range(n)
        if root_vector[j]
    )


def _enumerate_roots(cartan: tuple[Vector, ...]) -> list[tuple[Vector, Vector]]:
    """All (root, coroot) pairs, by closure of the simple ones under s_1..s_n."""
    n = len(cartan)
    start = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        start.append((e, e))
    seen = set(start)
    queue = deque(start)
    while queue:
        root, coroot = queue.popleft()
        for j in range(n):
            # s_j(beta) = beta - <alpha_j^vee, beta> alpha_j
            c = sum(cartan[j][k] * root[k] for k in range(n))
            # s_j(beta^vee) = beta^vee - <beta^vee, alpha_j> alpha_j^vee
            cv = sum(coroot[k] * cartan[k][j] for k in range(n))
            new_root = tuple(root[k] - (c if k == j else 0) for k in range(n))
            new_coroot = tuple(coroot[k] - (cv if k == j else 0) for k in range(n))
            pair = (new_root, new_coroot)
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return sorted(seen, key=lambda p: (sum(p[0]), p[0]))


@lru_cache(maxsize=None)
def _build(type_letter: str, rank: int) -> RootDatum:
    cartan = cartan_matrix(type_letter, rank)
    pairs = _enumerate_roots(cartan)
    positive = [(r, c) for r, c in pairs if all(x >= 0 for x in r)]
    negatives = {tuple(-x for x in r) for r, _ in positive}
    if {r for r, _ in pairs} != negatives | {r for r, _ in positive}:
        raise AssertionError(f"{type_letter}{rank}: root set is not symmetric")
    if len(positive) != positive_root_count(type_letter, rank):
        raise AssertionError(
            f"{type_letter}{rank}: found {len(positive)} positive roots, expected "
            f"{positive_root_count(type_letter, rank)}"
        )
    highest, highest_co = max(positive, key=lambda p: (sum(p[0]), p[0]))
    for r, _ in positive:
        if any(r[k] > highest[k] for k in range(rank)):
            raise AssertionError(f"{type_letter}{rank}: highest root does not dominate {r}")
    return RootDatum(
        type_letter=type_letter,
        rank=rank,
        cartan=cartan,
        positive_roots=tuple(r for r, _ in positive),
        positive_coroots=tuple(c for _, c in positive),
        highest_root=highest,
        highest_coroot=highest_co,
    )


def build_datum(type_letter: str, rank: int, max_rank: int | None = None) -> RootDatum:
    validate_type(type_letter, rank, max_rank)
    return _build(type_letter, rank)
