from fractions import Fraction as Fr

import pytest

from alcove_orbits.cartan import build_datum
from alcove_orbits.chamber_orbits import (
    apply_involution,
    brute_force_census,
    census,
    orbit_invariant,
    partition_of,
)
from alcove_orbits.involutions import NotAnInvolution, class_of, classify
from alcove_orbits.weyl_affine import affine_group, ball


def fixed_point_a1(x, G):
    # a reflection t_k s of the line fixes k/2
    assert x.finite.word == (1,)
    return Fr(x.translation[0], 2)


def test_invariant_examples():
    d = build_datum("A", 1)
    G = affine_group(d)
    s0, s1 = G.generators
    assert orbit_invariant(s1, G.identity, d) == s1
    inv = orbit_invariant(s1, s0, d)
    for x in [Fr(0), Fr(1, 3), Fr(5, 2)]:
        assert G.apply(inv, (x,)) == (2 - x,)
    assert orbit_invariant(s1, s1, d) == s1
    with pytest.raises(NotAnInvolution):
        orbit_invariant(G.translation((1,)), s0, d)


def test_census_a1_hand_values():
    d = build_datum("A", 1)
    G = affine_group(d)
    cl = classify(d)
    for R in range(6):
        assert census(cl[0].sigma, d, R).orbit_count == 1
    c1 = census(cl[1].sigma, d, 2)
    assert c1.orbit_count == 3
    assert {fixed_point_a1(o.invariant, G) for o in c1.orbits} == {0, 1, -1}
    c2 = census(cl[2].sigma, d, 2)
    assert c2.orbit_count == 3
    assert {fixed_point_a1(o.invariant, G) for o in c2.orbits} == {Fr(1, 2), Fr(-1, 2), Fr(3, 2)}


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("C", 2), ("G", 2)])
def test_census_structure(t, n):
    d = build_datum(t, n)
    G = affine_group(d)
    cl = classify(d)
    b = ball(d, 4)
    for c in cl:
        cen = census(c.sigma, d, 4, class_ref=c)
        assert sum(o.size_in_ball for o in cen.orbits) == len(b) == cen.ball_size
        keys = [(o.min_rep_distance, o.min_rep_word) for o in cen.orbits]
        assert keys == sorted(keys)
        parts = partition_of(cen, b, d)
        for o, part in zip(cen.orbits, parts):
            assert class_of(o.invariant, cl) is c
            assert o.min_rep.label == part[0]
            assert o.min_rep_word == b.word[part[0]]
            assert all(b.distance[x] >= o.min_rep_distance for x in part)


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("C", 2)])
def test_invariant_soundness(t, n):
    d = build_datum(t, n)
    G = affine_group(d)
    elems = ball(d, 4).elements
    for c in classify(d):
        sigma = c.sigma
        fibers = {}
        for x in elems:
            fibers.setdefault(orbit_invariant(sigma, x, d), []).append(x)
        for members in fibers.values():
            x = members[0]
            for y in members:
                g = G.mul(y, G.inv(x))
                assert G.mul(g, sigma) == G.mul(sigma, g)
                assert G.mul(g, x) == y


def test_brute_force_census_examples():
    d = build_datum("A", 1)
    cl = classify(d)
    assert len(brute_force_census(cl[0].sigma, d, 3, 6)) == 1
    assert len(brute_force_census(cl[1].sigma, d, 2, 6)) == 3
    a2 = build_datum("A", 2)
    sigma = classify(a2)[1].sigma
    cen = census(sigma, a2, 3)
    b = ball(a2, 3)
    fiber = {x: k for k, part in enumerate(partition_of(cen, b, a2)) for x in part}
    brute = brute_force_census(sigma, a2, 3, 10)
    for part in brute:
        assert len({fiber[x] for x in part}) == 1
    assert len(brute) == cen.orbit_count


def test_brute_force_short_conjugators_only_refine():
    d = build_datum("A", 2)
    sigma = classify(d)[1].sigma
    cen = census(sigma, d, 3)
    short = brute_force_census(sigma, d, 3, 0)
    # only the identity is available, so every alcove is its own part
    assert len(short) == len(ball(d, 3)) > cen.orbit_count


def test_monotone_growth():
    for t, n in [("A", 1), ("A", 2), ("C", 2)]:
        d = build_datum(t, n)
        for c in classify(d):
            counts = [census(c.sigma, d, R).orbit_count for R in range(7)]
            assert counts == sorted(counts)


def test_apply_involution():
    d = build_datum("A", 1)
    G = affine_group(d)
    cl = classify(d)
    a0 = G.alcove(G.identity)
    assert apply_involution(cl[0].sigma, a0, d) == a0
    s1 = G.generators[1]
    assert apply_involution(s1, a0, d).label == s1
    for t, n in [("A", 2), ("G", 2)]:
        dd = build_datum(t, n)
        GG = affine_group(dd)
        for c in classify(dd):
            for x in ball(dd, 3):
                a = GG.alcove(x)
                img = apply_involution(c.sigma, a, dd)
                assert apply_involution(c.sigma, img, dd) == a
                # sigma lies in its own centralizer, so orbits are preserved
                assert orbit_invariant(c.sigma, img.label, dd) == orbit_invariant(c.sigma, x, dd)


def test_parallel_census_matches_serial():
    d = build_datum("C", 2)
    for c in classify(d)[1:3]:
        a = census(c.sigma, d, 5)
        b = census(c.sigma, d, 5, workers=2)
        assert a == b
