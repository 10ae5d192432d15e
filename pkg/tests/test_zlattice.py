from itertools import combinations, product
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alcove_orbits.zlattice import (
    LatticeError,
    determinant,
    diagonal,
    hermite_basis,
    hermite_reduce,
    image_lattice,
    kernel_lattice,
    matmul,
    matvec,
    quotient,
    smith_normal_form,
    solve_integer,
)


def determinantal_divisors(m):
    """Oracle: d_k = gcd of k x k minors / gcd of (k-1) x (k-1) minors."""
    r, c = len(m), len(m[0])
    out = []
    prev = 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                g = gcd(g, int(sympy.Matrix([[m[i][j] for j in cols] for i in rows]).det()))
        if g == 0:
            out.extend([0] * (min(r, c) - len(out)))
            break
        out.append(g // prev)
        prev = g
    return out


def check_snf(m):
    u, d, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    r, c = len(m), len(m[0])
    for i in range(r):
        for j in range(c):
            if i != j:
                assert d[i][j] == 0
    diag = diagonal(d)
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and (b % a == 0 if a else b == 0)
    return diag


def test_snf_diag_2_3():
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]


def test_snf_zero():
    assert check_snf([[0, 0], [0, 0]]) == [0, 0]


def test_snf_frozen_by_minor_oracle():
    m = [[2, 4], [6, 8]]
    assert determinantal_divisors(m) == [2, 4]
    assert check_snf(m) == [2, 4]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_minor_oracle(m):
    assert check_snf(m) == determinantal_divisors(m)


def test_kernel_examples():
    assert kernel_lattice([[1, 0], [0, 1]]) == []
    assert kernel_lattice([[0]]) == [(1,)]
    # 1 + s_1 on Q^vee for A2
    one_plus_s1 = [[0, 1], [0, 2]]
    ker = kernel_lattice(one_plus_s1)
    assert len(ker) == 1
    assert matvec(one_plus_s1, (1, 0)) == [0, 0]
    assert ker == [(1, 0)]


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilated(m):
    ker = kernel_lattice(m)
    for v in ker:
        assert matvec(m, v) == [0] * len(m)
    rank = sum(1 for x in diagonal(smith_normal_form(m)[1]) if x)
    assert len(ker) == len(m[0]) - rank


def test_hermite_reduce_is_canonical():
    basis = hermite_basis([(2, 0, 2), (0, 2, 2), (1, 1, 2)])
    assert basis == [(1, 1, 2), (0, 2, 2)]
    a = hermite_reduce((5, 3, 1), basis)
    b = hermite_reduce((5 + 3 * 1, 3 + 3 * 1 - 2 * 2, 1 + 3 * 2 - 2 * 2), basis)
    assert a == b


def test_solve_integer():
    assert solve_integer([(2, 0), (0, 3)], (4, 9)) == (2, 3)
    assert solve_integer([(2, 0)], (3, 0)) is None
    assert solve_integer([(2, 0)], (2, 1)) is None
    assert solve_integer([], (0, 0)) == ()


def test_quotient_examples():
    q = quotient([(1,)], [(2,)], 1)
    assert len(q) == 2 and q.elementary_divisors == (2,)
    assert q.coset_reps == ((0,), (1,))
    q = quotient([(1, 0), (0, 1)], [(1, 0), (0, 1)], 2)
    assert len(q) == 1 and q.elementary_divisors == ()


def test_quotient_a2_reflection_trivial():
    # L = ker(1 + s_1) = Z alpha_1^vee, M = (1 - s_1) Q^vee: s_1 sends
    # alpha_1^vee -> -alpha_1^vee and alpha_2^vee -> alpha_1^vee + alpha_2^vee
    one_minus_s1 = [[2, -1], [0, 0]]
    m = image_lattice(one_minus_s1)
    assert m == [(1, 0)]
    q = quotient(kernel_lattice([[0, 1], [0, 2]]), m, 2)
    assert len(q) == 1


def test_quotient_rejections():
    with pytest.raises(LatticeError, match="does not lie in L"):
        quotient([(2,)], [(1,)], 1)
    with pytest.raises(LatticeError, match="infinite quotient"):
        quotient([(1, 0), (0, 1)], [(2, 0)], 2)
    with pytest.raises(LatticeError, match="infinite quotient"):
        quotient([(1,)], [], 1)


lattice_case = st.tuples(
    st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=3),
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4),
)


@settings(max_examples=100, deadline=None)
@given(lattice_case)
def test_quotient_properties(case):
    gens, coeffs = case
    basis = hermite_basis(gens, 3)
    k = len(basis)
    # M spanned by integer combinations of L plus scaled basis vectors so it is full rank
    rels = [tuple(3 * x for x in b) for b in basis]
    for c in coeffs:
        rels.append(tuple(sum(c[j % len(c)] * basis[j][t] for j in range(k)) for t in range(3)))
    q = quotient(basis, rels, 3)
    size = 1
    for dv in q.elementary_divisors:
        size *= dv
    assert len(q.coset_reps) == size
    for r in rels:
        assert solve_integer(basis, r) is not None
    for a, b in combinations(q.coset_reps, 2):
        assert not q.same_coset(a, b)
    for idx, rep in enumerate(q.coset_reps):
        assert q.index_of(rep) == idx
        assert q.reduce(rep) == rep


def test_quotient_index_of_shift_invariant():
    q = quotient([(1, 0), (0, 1)], [(2, 0), (0, 4), (2, 2)], 2)
    for v in product(range(-3, 4), repeat=2):
        for r in [(2, 0), (0, 4), (2, 2)]:
            w = tuple(a + b for a, b in zip(v, r))
            assert q.index_of(v) == q.index_of(w)
