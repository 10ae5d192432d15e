import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alcove_orbits.cartan import (
    build_datum,
    pairing,
    positive_root_count,
)
from alcove_orbits.config import InvalidDatumError

ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def test_a2_cartan():
    assert build_datum("A", 2).cartan == ((2, -1), (-1, 2))


def test_a2_root_count():
    assert len(build_datum("A", 2).positive_roots) == 3


def test_b2_c2_are_transposes():
    b, c = build_datum("B", 2), build_datum("C", 2)
    assert b.cartan == tuple(zip(*c.cartan))
    # short simple root carries the -2 in its row
    assert b.cartan[1][0] == -2 and c.cartan[0][1] == -2


def _g2_highest_root_planar():
    # independent realization: short alpha_1 at angle 0, long alpha_2 at 150 degrees
    a1 = complex(1, 0)
    a2 = math.sqrt(3) * cmath.exp(1j * 5 * math.pi / 6)
    roots = [cmath.exp(1j * k * math.pi / 3) for k in range(6)]
    roots += [math.sqrt(3) * cmath.exp(1j * (math.pi / 6 + k * math.pi / 3)) for k in range(6)]
    det = a1.real * a2.imag - a1.imag * a2.real
    coords = []
    for r in roots:
        x = (r.real * a2.imag - r.imag * a2.real) / det
        y = (a1.real * r.imag - a1.imag * r.real) / det
        coords.append((round(x), round(y)))
        assert abs(x - round(x)) < 1e-9 and abs(y - round(y)) < 1e-9
    positive = [c for c in coords if c[0] >= 0 and c[1] >= 0]
    assert len(positive) == 6
    return max(positive, key=sum)


def test_g2_highest_root_matches_planar_oracle():
    expected = _g2_highest_root_planar()
    assert expected == (3, 2)
    assert build_datum("G", 2).highest_root == expected


@pytest.mark.parametrize("t,n", ALL_TYPES)
def test_datum_invariants(t, n):
    d = build_datum(t, n)
    a = d.cartan
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
    assert len(d.positive_roots) == positive_root_count(t, n)
    roots = set(d.positive_roots) | {tuple(-x for x in r) for r in d.positive_roots}
    for r in d.positive_roots:
        for i in range(n):
            c = sum(a[i][k] * r[k] for k in range(n))
            image = tuple(r[k] - (c if k == i else 0) for k in range(n))
            assert image in roots
        assert all(h >= x for h, x in zip(d.highest_root, r))
    assert pairing(d.highest_coroot, d.highest_root, d) == 2


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 4), ("F", 4), ("G", 2)])
def test_root_coroot_pairing_is_two(t, n):
    d = build_datum(t, n)
    for r, c in zip(d.positive_roots, d.positive_coroots):
        assert pairing(c, r, d) == 2


def test_pairing_examples():
    a2 = build_datum("A", 2)
    for t, n in [("A", 2), ("B", 3), ("G", 2)]:
        d = build_datum(t, n)
        e1 = tuple(int(k == 0) for k in range(n))
        assert pairing(e1, e1, d) == 2
    assert pairing((1, 0), (0, 1), a2) == -1
    a1 = build_datum("A", 1)
    assert pairing(a1.highest_coroot, a1.highest_root, a1) == 2


def test_pairing_dimension_mismatch():
    with pytest.raises(InvalidDatumError):
        pairing((1, 0), (1,), build_datum("A", 2))


vec3 = st.tuples(*[st.integers(-20, 20)] * 3)


@given(vec3, vec3, vec3)
def test_pairing_bilinear(x, y, z):
    d = build_datum("B", 3)
    s = tuple(a + b for a, b in zip(x, y))
    assert pairing(s, z, d) == pairing(x, z, d) + pairing(y, z, d)
    assert pairing(z, s, d) == pairing(z, x, d) + pairing(z, y, d)


@pytest.mark.parametrize(
    "t,n,msg",
    [
        ("Z", 1, "unknown type"),
        ("A", 0, "rank >= 1"),
        ("B", 1, "rank >= 2"),
        ("D", 2, "rank >= 3"),
        ("E", 5, "rank >= 6"),
        ("E", 9, "rank <= 8"),
        ("F", 3, "rank >= 4"),
        ("G", 3, "rank <= 2"),
        ("A", 9, "configured bound"),
    ],
)
def test_invalid_types(t, n, msg):
    with pytest.raises(InvalidDatumError, match=msg):
        build_datum(t, n)


def test_rank_bound_configurable():
    assert build_datum("A", 9, max_rank=9).rank == 9
