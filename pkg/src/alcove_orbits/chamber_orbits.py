"""Orbits of the centralizer of an involution sigma on alcoves.

Alcoves x.A0 and y.A0 lie in one orbit of ``C(sigma)`` exactly when
``x^{-1} sigma x == y^{-1} sigma y``: then ``g = y x^{-1}`` commutes with
sigma and carries x to y. The census groups a Cayley ball by this value and
never builds the centralizer itself.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from alcove_orbits.cartan import RootDatum, build_datum
from alcove_orbits.involutions import InvolutionClass, NotAnInvolution
from alcove_orbits.unionfind import UnionFind
from alcove_orbits.weyl_affine import AffineElement, Alcove, Ball, affine_group


@dataclass(frozen=True)
class OrbitRecord:
    invariant: AffineElement
    min_rep: Alcove
    min_rep_word: tuple[int, ...]
    min_rep_distance: int
    size_in_ball: int


@dataclass(frozen=True)
class OrbitCensus:
    sigma: AffineElement
    radius: int
    orbit_count: int
    orbits: tuple[OrbitRecord, ...]
    ball_size: int
    class_ref: InvolutionClass | None = None


def _check_sigma(sigma: AffineElement, datum: RootDatum) -> None:
    if not affine_group(datum).is_order_two(sigma):
        raise NotAnInvolution(f"{sigma} does not have order dividing 2")


def orbit_invariant(sigma: AffineElement, x: AffineElement, datum: RootDatum) -> AffineElement:
    """``x^{-1} sigma x``; constant exactly on the centralizer orbits."""
    _check_sigma(sigma, datum)
    G = affine_group(datum)
    return G.mul(G.mul(G.inv(x), sigma), x)


def _invariant_keys(args):
    type_letter, rank, sigma_key, chunk = args
    datum = build_datum(type_letter, rank)
    G = affine_group(datum)
    sigma = AffineElement(sigma_key[0], G.W.element(sigma_key[1]))
    out = []
    for lam, mat in chunk:
        x = AffineElement(lam, G.W.element(mat))
        y = G.mul(G.mul(G.inv(x), sigma), x)
        out.append((y.translation, y.finite.matrix))
    return out


def invariants(
    sigma: AffineElement,
    datum: RootDatum,
    elements: Sequence[AffineElement],
    workers: int = 1,
) -> list[AffineElement]:
    """``x^{-1} sigma x`` for each x, optionally fanned out over processes.
    Results are in input order regardless of ``workers``."""
    G = affine_group(datum)
    if workers <= 1 or len(elements) < 2 * workers:
        return [G.mul(G.mul(G.inv(x), sigma), x) for x in elements]
    keys = [(x.translation, x.finite.matrix) for x in elements]
    size = -(-len(keys) // workers)
    chunks = [keys[i : i + size] for i in range(0, len(keys), size)]
    sigma_key = (sigma.translation, sigma.finite.matrix)
    jobs = [(datum.type_letter, datum.rank, sigma_key, c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_invariant_keys, jobs))
    return [
        AffineElement(lam, G.W.element(mat)) for part in results for lam, mat in part
    ]


def census_from_ball(
    sigma: AffineElement,
    datum: RootDatum,
    ball: Ball,
    radius: int | None = None,
    values: Sequence[AffineElement] | None = None,
    class_ref: InvolutionClass | None = None,
    workers: int = 1,
) -> OrbitCensus:
    """Census restricted to elements of ``ball`` within ``radius``.

    ``values`` may carry precomputed invariants aligned with ``ball.elements``.
    """
    _check_sigma(sigma, datum)
    G = affine_group(datum)
    if radius is None:
        radius = ball.radius
    if values is None:
        values = invariants(sigma, datum, ball.elements, workers)
    first: dict[AffineElement, AffineElement] = {}
    size: dict[AffineElement, int] = {}
    count = 0
    # ball order is (distance, canonical word), so the first hit is the min rep
    for x, inv in zip(ball.elements, values):
        if ball.distance[x] > radius:
            break
        count += 1
        if inv not in first:
            first[inv] = x
            size[inv] = 0
        size[inv] += 1
    orbits = tuple(
        OrbitRecord(
            invariant=inv,
            min_rep=G.alcove(x),
            min_rep_word=ball.word[x],
            min_rep_distance=ball.distance[x],
            size_in_ball=size[inv],
        )
        for inv, x in first.items()
    )
    return OrbitCensus(sigma, radius, len(orbits), orbits, count, class_ref)


def census(
    sigma: AffineElement,
    datum: RootDatum,
    radius: int,
    budget: int | None = None,
    class_ref: InvolutionClass | None = None,
    workers: int = 1,
) -> OrbitCensus:
    _check_sigma(sigma, datum)
    b = affine_group(datum).ball(radius, budget)
    return census_from_ball(sigma, datum, b, class_ref=class_ref, workers=workers)


def brute_force_census(
    sigma: AffineElement,
    datum: RootDatum,
    radius: int,
    r_conjugators: int,
    budget: int | None = None,
) -> list[list[AffineElement]]:
    """Join x and y in ``ball(radius)`` when some g in ``ball(r_conjugators)``
    commutes with sigma and has ``g x == y``."""
    _check_sigma(sigma, datum)
    G = affine_group(datum)
    b = G.ball(radius, budget)
    uf = UnionFind(b.elements)
    for g in G.ball(r_conjugators, budget):
        if G.mul(g, sigma) != G.mul(sigma, g):
            continue
        for x in b.elements:
            y = G.mul(g, x)
            if y in b:
                uf.union(x, y)
    return uf.groups()


def apply_involution(sigma: AffineElement, alcove: Alcove, datum: RootDatum) -> Alcove:
    _check_sigma(sigma, datum)
    G = affine_group(datum)
    return G.alcove(G.mul(sigma, alcove.label))


def partition_of(census_result: OrbitCensus, ball: Ball, datum: RootDatum) -> list[list[AffineElement]]:
    """The census as an explicit partition of the ball, orbit order kept."""
    G = affine_group(datum)
    sigma = census_result.sigma
    parts: dict[AffineElement, list[AffineElement]] = {o.invariant: [] for o in census_result.orbits}
    for x in ball.within(census_result.radius):
        parts[G.mul(G.mul(G.inv(x), sigma), x)].append(x)
    return list(parts.values())
