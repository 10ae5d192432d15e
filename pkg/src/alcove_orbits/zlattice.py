"""Integer matrix algebra: Smith and Hermite normal forms, kernels, and finite
lattice quotients. Python ints throughout, so there is no overflow."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from alcove_orbits.config import AlcoveOrbitsError

IntMatrix = list[list[int]]
Vector = tuple[int, ...]


class LatticeError(AlcoveOrbitsError, ValueError):
    pass


def as_matrix(m: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    rows = [list(map(int, r)) for r in m]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != cols:
            raise LatticeError(f"ragged matrix: expected {cols} columns, got {len(r)}")
    return rows


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    inner = len(b)
    cols = len(b[0]) if inner else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D``, U and V unimodular and
    D diagonal with non-negative entries ``d_1 | d_2 | ...``.

    Pivot choice is the smallest nonzero absolute value in the remaining
    block, ties broken row-major.
    """
    d = as_matrix(m)
    r = len(d)
    c = len(d[0]) if r else 0
    u = identity(r)
    v = identity(c)

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        if q:
            d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        if q:
            for row in d:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return u, d, v
            _, pi, pj = best
            if pi != t:
                swap_rows(pi, t)
            if pj != t:
                swap_cols(pj, t)
            p = d[t][t]
            for i in range(t + 1, r):
                add_row(i, t, -(d[i][t] // p))
            for j in range(t + 1, c):
                add_col(j, t, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, r)) or any(d[t][j] for j in range(t + 1, c)):
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if d[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            if p < 0:
                d[t] = [-x for x in d[t]]
                u[t] = [-x for x in u[t]]
            break
    return u, d, v


def diagonal(d: IntMatrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def integer_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular matrix."""
    u, d, v = smith_normal_form(m)
    n = len(u)
    diag = diagonal(d)
    if len(diag) != n or any(x != 1 for x in diag):
        raise LatticeError("matrix is not unimodular")
    # U m V = I  =>  m^{-1} = V U
    return matmul(v, u)


def hermite_basis(vectors: Sequence[Sequence[int]], dim: int | None = None) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Rows are in echelon form with positive pivots; entries above each pivot
    lie in ``[0, pivot)``. Zero rows are dropped, so the result is a basis.
    """
    rows = [list(v) for v in vectors]
    if dim is None:
        dim = len(rows[0]) if rows else 0
    basis: list[list[int]] = []
    for col in range(dim):
        live = [row for row in rows if row[col] != 0]
        if not live:
            continue
        rest = [row for row in rows if row[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda row: abs(row[col]))
            p = live[0]
            nxt = [p]
            for row in live[1:]:
                q = row[col] // p[col]
                row = [x - q * y for x, y in zip(row, p)]
                (nxt if row[col] else rest).append(row)
            live = nxt
        p = live[0]
        if p[col] < 0:
            p = [-x for x in p]
        for k, prev in enumerate(basis):
            q = prev[col] // p[col]
            if q:
                basis[k] = [x - q * y for x, y in zip(prev, p)]
        basis.append(p)
        rows = [row for row in rest if any(row)]
    return [tuple(b) for b in basis]


def hermite_reduce(vector: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Canonical representative of ``vector`` modulo the lattice whose Hermite
    basis is ``basis``: coordinates at pivot columns land in ``[0, pivot)``."""
    v = list(vector)
    for row in basis:
        col = next(k for k, x in enumerate(row) if x)
        q = v[col] // row[col]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)


def kernel_lattice(m: Sequence[Sequence[int]], cols: int | None = None) -> list[Vector]:
    """Basis of the integer kernel ``{v : m v = 0}`` in Hermite form."""
    rows = as_matrix(m, cols)
    if cols is None:
        cols = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(r) for r in identity(cols)]
    _, d, v = smith_normal_form(rows)
    rank = sum(1 for x in diagonal(d) if x)
    kernel = [tuple(v[i][j] for i in range(cols)) for j in range(rank, cols)]
    return hermite_basis(kernel, cols)


def image_lattice(m: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of the column span of ``m`` in Hermite form."""
    rows = as_matrix(m)
    return hermite_basis(transpose(rows), len(rows))


def solve_integer(basis: Sequence[Sequence[int]], target: Sequence[int]) -> Vector | None:
    """Integer coefficients ``c`` with ``sum(c_i * basis_i) == target``, or
    None when no such combination exists."""
    k = len(basis)
    n = len(target)
    if k == 0:
        return () if not any(target) else None
    b = transpose(basis)  # n x k, columns are basis vectors
    u, d, v = smith_normal_form(b)
    ut = matvec(u, target)
    diag = diagonal(d)
    y = [0] * k
    for i in range(n):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ut[i] != 0:
                return None
        else:
            if ut[i] % di:
                return None
            y[i] = ut[i] // di
    return tuple(matvec(v, y))


@dataclass(frozen=True)
class LatticeQuotient:
    """A finite quotient ``L / M`` of integer lattices in ``Z^ambient_rank``.

    ``elementary_divisors`` lists only the non-unit invariant factors, so the
    trivial quotient has none. Coset representatives are listed in order of
    their residue vectors and are reduced modulo M to canonical form.
    """

    ambient_rank: int
    generators: tuple[Vector, ...]
    relations: tuple[Vector, ...]
    elementary_divisors: tuple[int, ...]
    coset_reps: tuple[Vector, ...]
    # rows of the unimodular change of basis on L-coordinates, restricted to
    # the non-unit divisors
    _residue_rows: tuple[Vector, ...]
    _relation_hnf: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.coset_reps)

    def residue(self, vector: Sequence[int]) -> tuple[int, ...]:
        coords = solve_integer(self.generators, vector)
        if coords is None:
            raise LatticeError(f"{tuple(vector)} is not in the lattice L")
        return tuple(
            sum(a * b for a, b in zip(row, coords)) % dv
            for row, dv in zip(self._residue_rows, self.elementary_divisors)
        )

    def index_of(self, vector: Sequence[int]) -> int:
        """Position of the coset of ``vector`` within ``coset_reps``."""
        idx = 0
        for r, dv in zip(self.residue(vector), self.elementary_divisors):
            idx = idx * dv + r
        return idx

    def reduce(self, vector: Sequence[int]) -> Vector:
        return hermite_reduce(vector, self._relation_hnf)

    def same_coset(self, a: Sequence[int], b: Sequence[int]) -> bool:
        diff = [x - y for x, y in zip(a, b)]
        return solve_integer(self._relation_hnf, diff) is not None


def quotient(
    l_basis: Sequence[Sequence[int]],
    m_vectors: Sequence[Sequence[int]],
    ambient_rank: int,
) -> LatticeQuotient:
    """Finite quotient ``L / M`` with explicit coset representatives.

    ``l_basis`` must be linearly independent; ``m_vectors`` may be any
    spanning set of M. Raises :class:`LatticeError` if M is not inside L or
    the quotient is infinite.
    """
    gens = [tuple(map(int, v)) for v in l_basis]
    rels = [tuple(map(int, v)) for v in m_vectors]
    for v in gens + rels:
        if len(v) != ambient_rank:
            raise LatticeError(f"vector {v} does not have length {ambient_rank}")
    k = len(gens)
    if gens:
        _, d, _ = smith_normal_form(gens)
        if sum(1 for x in diagonal(d) if x) != k:
            raise LatticeError("generators of L are linearly dependent")
    coords = []
    for v in rels:
        c = solve_integer(gens, v)
        if c is None:
            raise LatticeError(f"relation {v} does not lie in L")
        coords.append(c)
    relation_hnf = hermite_basis(rels, ambient_rank)
    if len(relation_hnf) < k:
        raise LatticeError(
            f"infinite quotient: rank(M) = {len(relation_hnf)} < rank(L) = {k}"
        )
    if k == 0:
        return LatticeQuotient(
            ambient_rank, (), tuple(rels), (), ((0,) * ambient_rank,), (), tuple(relation_hnf)
        )
    # k x len(rels), columns are L-coordinates of the relations
    rmat = transpose(coords)
    u, d, _ = smith_normal_form(rmat)
    divs = diagonal(d)
    keep = [i for i, x in enumerate(divs) if x != 1]
    divisors = tuple(divs[i] for i in keep)
    residue_rows = tuple(tuple(u[i]) for i in keep)
    u_inv = integer_inverse(u)
    reps = []
    for residue in product(*(range(x) for x in divisors)):
        y = [0] * k
        for i, r in zip(keep, residue):
            y[i] = r
        c = matvec(u_inv, y)
        vec = tuple(sum(c[j] * gens[j][t] for j in range(k)) for t in range(ambient_rank))
        reps.append(hermite_reduce(vec, relation_hnf))
    return LatticeQuotient(
        ambient_rank=ambient_rank,
        generators=tuple(gens),
        relations=tuple(rels),
        elementary_divisors=divisors,
        coset_reps=tuple(reps),
        _residue_rows=residue_rows,
        _relation_hnf=tuple(relation_hnf),
    )
