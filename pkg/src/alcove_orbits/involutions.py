"""Conjugacy classes of elements of order dividing 2 in the affine Weyl group.

Every such element is ``t_lam w`` with ``w^2 = 1`` and ``w(lam) = -lam``.
Conjugating by ``t_mu v`` with ``v w v^{-1} = w`` sends ``lam`` to
``v(lam) + (1 - w) mu``, so for a fixed finite class representative w the
classes are the orbits of the centralizer ``C_W(w)`` on the finite group
``L_w / (1 - w) Q^vee`` where ``L_w = ker(1 + w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from alcove_orbits.cartan import RootDatum
from alcove_orbits.config import AlcoveOrbitsError
from alcove_orbits.unionfind import UnionFind
from alcove_orbits.weyl_affine import AffineElement, AffineWeylGroup, affine_group
from alcove_orbits.weyl_finite import WeylElement
from alcove_orbits.zlattice import LatticeQuotient, image_lattice, kernel_lattice, quotient


class NotAnInvolution(AlcoveOrbitsError, ValueError):
    pass


@dataclass(frozen=True)
class InvolutionClass:
    index: int
    finite_class_rep: WeylElement
    finite_class_size: int
    lambda_rep: tuple[int, ...]
    sigma: AffineElement
    quotient: LatticeQuotient
    orbit_index: int
    # positions in quotient.coset_reps making up this class
    cosets: frozenset[int]
    datum: RootDatum = field(repr=False, compare=False)

    @property
    def is_identity(self) -> bool:
        return not self.finite_class_rep.word

    @property
    def sigma_word(self) -> tuple[int, ...]:
        return affine_group(self.datum).reduced_word(self.sigma)


def one_plus(w: WeylElement) -> list[list[int]]:
    m = w.matrix
    return [[m[i][j] + (i == j) for j in range(len(m))] for i in range(len(m))]


def one_minus(w: WeylElement) -> list[list[int]]:
    m = w.matrix
    return [[(i == j) - m[i][j] for j in range(len(m))] for i in range(len(m))]


def involution_lattices(w: WeylElement) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """``(basis of ker(1+w), basis of (1-w) Q^vee)``, both in Hermite form."""
    n = len(w.matrix)
    return kernel_lattice(one_plus(w), n), image_lattice(one_minus(w))


def classify(datum: RootDatum) -> list[InvolutionClass]:
    """All conjugacy classes of order-dividing-2 elements, identity class first."""
    G = affine_group(datum)
    W = G.W
    n = datum.rank
    found = []
    for fclass in W.involution_classes():
        w = fclass.representative
        lw, mw = involution_lattices(w)
        q = quotient(lw, mw, n)
        cent = W.centralizer(w)
        uf = UnionFind(range(len(q)))
        for v in cent:
            for idx, rep in enumerate(q.coset_reps):
                uf.union(idx, q.index_of(v.act(rep)))
        orbits = []
        for members in uf.groups():
            lam = min(q.coset_reps[i] for i in members)
            orbits.append((lam, frozenset(members)))
        orbits.sort(key=lambda o: o[0])
        for k, (lam, members) in enumerate(orbits):
            found.append((w, len(fclass.members), lam, q, k, members))
    found.sort(key=lambda f: (bool(f[0].word), f[0].word, f[2]))
    return [
        InvolutionClass(
            index=i,
            finite_class_rep=w,
            finite_class_size=size,
            lambda_rep=lam,
            sigma=AffineElement(lam, w),
            quotient=q,
            orbit_index=k,
            cosets=members,
            datum=datum,
        )
        for i, (w, size, lam, q, k, members) in enumerate(found)
    ]


def class_of(x: AffineElement, classes: Sequence[InvolutionClass]) -> InvolutionClass:
    """The class in ``classes`` containing the order-dividing-2 element x."""
    if not classes:
        raise AlcoveOrbitsError("empty class list")
    G = affine_group(classes[0].datum)
    if not G.is_order_two(x):
        raise NotAnInvolution(f"{x} does not have order dividing 2")
    W = G.W
    for fclass in W.involution_classes():
        if x.finite in fclass.members:
            rep = fclass.representative
            break
    else:  # pragma: no cover
        raise AssertionError(f"finite part of {x} is not a listed involution")
    v = W.conjugator_to(x.finite, rep)
    lam = v.act(x.translation)
    for c in classes:
        if c.finite_class_rep == rep:
            idx = c.quotient.index_of(lam)
            if idx in c.cosets:
                return c
    raise AssertionError(f"no class contains {x}")  # pragma: no cover


def brute_force_class_census(
    datum: RootDatum,
    r_elements: int,
    r_conjugators: int,
    budget: int | None = None,
    group: AffineWeylGroup | None = None,
) -> list[list[AffineElement]]:
    """Partition the order-dividing-2 elements of ``ball(r_elements)`` by
    conjugation with every element of ``ball(r_conjugators)``.

    Parts come out in ball order of their first member. This is only a
    refinement of the true class partition: two conjugate elements whose
    conjugators are all longer than ``r_conjugators`` stay apart.
    """
    G = group or affine_group(datum)
    elems = [x for x in G.ball(r_elements, budget) if G.is_order_two(x)]
    members = set(elems)
    uf = UnionFind(elems)
    for g in G.ball(r_conjugators, budget):
        ginv = G.inv(g)
        for x in elems:
            y = G.mul(G.mul(g, x), ginv)
            if y in members:
                uf.union(x, y)
    return uf.groups()
