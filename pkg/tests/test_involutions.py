from itertools import product

import pytest

from alcove_orbits.cartan import build_datum
from alcove_orbits.involutions import (
    NotAnInvolution,
    brute_force_class_census,
    class_of,
    classify,
    involution_lattices,
)
from alcove_orbits.weyl_affine import affine_group, ball
from alcove_orbits.weyl_finite import finite_group
from alcove_orbits.zlattice import solve_integer

RANK_LE_4 = (
    [("A", n) for n in range(1, 5)]
    + [("B", n) for n in range(2, 5)]
    + [("C", n) for n in range(2, 5)]
    + [("D", 3), ("D", 4), ("F", 4), ("G", 2)]
)


def test_a1_three_classes():
    d = build_datum("A", 1)
    G = affine_group(d)
    cl = classify(d)
    assert len(cl) == 3
    assert cl[0].sigma == G.identity
    s0, s1 = G.generators
    assert cl[1].sigma == s1
    # t_{alpha^vee} s_1 is the reflection fixing alpha^vee / 2, i.e. s_0
    assert cl[2].sigma == s0 == G.element((1,), (1,))
    assert cl[1].quotient.elementary_divisors == (2,)


def test_a2_two_classes():
    cl = classify(build_datum("A", 2))
    assert len(cl) == 2
    assert cl[1].finite_class_rep.word == (1,)
    assert len(cl[1].quotient) == 1


@pytest.mark.parametrize("t,n", RANK_LE_4)
def test_one_identity_class_and_invariants(t, n):
    d = build_datum(t, n)
    G = affine_group(d)
    cl = classify(d)
    assert [c.is_identity for c in cl].count(True) == 1
    assert cl[0].is_identity and cl[0].lambda_rep == (0,) * n
    for c in cl:
        assert G.is_order_two(c.sigma)
        w = c.finite_class_rep
        assert w.act(c.lambda_rep) == tuple(-x for x in c.lambda_rep)
    keys = [(c.finite_class_rep.word, c.lambda_rep) for c in cl[1:]]
    assert keys == sorted(keys)


@pytest.mark.parametrize("t,n", RANK_LE_4)
def test_image_inside_kernel(t, n):
    d = build_datum(t, n)
    for fc in finite_group(d).involution_classes():
        w = fc.representative
        lw, mw = involution_lattices(w)
        for v in mw:
            assert w.act(v) == tuple(-x for x in v)
            assert solve_integer(lw, v) is not None


def test_class_of_examples():
    d = build_datum("A", 1)
    G = affine_group(d)
    cl = classify(d)
    assert class_of(G.identity, cl) is cl[0]
    s1 = G.generators[1]
    assert class_of(G.element((2,), (1,)), cl) is class_of(s1, cl) is cl[1]
    assert class_of(G.element((-1,), (1,)), cl) is cl[2]
    with pytest.raises(NotAnInvolution):
        class_of(G.translation((1,)), cl)


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("C", 2), ("G", 2), ("A", 3), ("B", 3)])
def test_class_of_round_trip_and_coverage(t, n):
    d = build_datum(t, n)
    G = affine_group(d)
    cl = classify(d)
    for c in cl:
        assert class_of(c.sigma, cl) is c
    radius = 6 if n <= 2 else 4
    for x in ball(d, radius):
        if G.is_order_two(x):
            c = class_of(x, cl)
            # x really is conjugate to the representative: transport and compare cosets
            assert G.W.conjugator_to(x.finite, c.finite_class_rep) is not None


def test_brute_force_examples():
    a1 = build_datum("A", 1)
    parts = brute_force_class_census(a1, 5, 8)
    assert len(parts) == 3
    assert len(brute_force_class_census(a1, 0, 3)) == 1
    a2 = build_datum("A", 2)
    cl = classify(a2)
    parts = brute_force_class_census(a2, 4, 8)
    hit = {class_of(x, cl).index for p in parts for x in p}
    assert len(hit) <= 2


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("C", 2), ("G", 2)])
def test_brute_force_parts_never_straddle(t, n):
    d = build_datum(t, n)
    cl = classify(d)
    for part in brute_force_class_census(d, 5, 6):
        assert len({class_of(x, cl).index for x in part}) == 1


def test_conjugation_formula():
    # t_mu v . t_lam w . (t_mu v)^{-1} = t_{v lam + (1 - w) mu} w when v commutes with w
    d = build_datum("C", 2)
    G = affine_group(d)
    cl = classify(d)
    for c in cl:
        w = c.finite_class_rep
        for v in G.W.centralizer(w):
            for mu in [(1, 0), (0, 1), (2, -1)]:
                g = G.element(mu, v.word)
                y = G.conjugate(g, c.sigma)
                lam = tuple(
                    a + m - b for a, m, b in zip(v.act(c.lambda_rep), mu, w.act(mu))
                )
                assert y == G.element(lam, w.word)
                assert class_of(y, cl) is c


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("G", 2)])
def test_lambda_rep_is_lex_least_non_negative(t, n):
    # scan non-negative vectors in lex order; the first one in the class's cosets wins
    for c in classify(build_datum(t, n)):
        w = c.finite_class_rep
        first = next(
            v
            for v in product(range(8), repeat=n)
            if w.act(v) == tuple(-x for x in v) and c.quotient.index_of(v) in c.cosets
        )
        assert first == c.lambda_rep
