"""Serializable decomposition reports and the oracle cross-check.

JSON layout is ``{meta, classes[], totals[]}``. Words are integer arrays with
generator ``s_0`` written as 0; vectors are integer arrays in simple-coroot
coordinates; rational points are ``"p/q"`` strings.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from alcove_orbits import __version__
from alcove_orbits.cartan import RootDatum, build_datum
from alcove_orbits.chamber_orbits import (
    brute_force_census,
    census_from_ball,
    invariants,
    partition_of,
)
from alcove_orbits.config import DEFAULT_BUDGETS, AlcoveOrbitsError
from alcove_orbits.involutions import (
    InvolutionClass,
    brute_force_class_census,
    class_of,
    classify,
)
from alcove_orbits.weyl_affine import affine_group

TOOL_NAME = "alcove-orbits"

CONVENTION_NOTE = (
    "Cartan matrix a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering; "
    "coroot lattice coordinates in the simple-coroot basis; affine elements "
    "t_lam*w act by x -> w(x) + lam; s_0 = t_{theta^vee} s_theta is the "
    "reflection in <x, theta> = 1; base alcove A0 = {<x, alpha_i> > 0, "
    "<x, theta> < 1} labels the identity; orbits of the centralizer of sigma "
    "are keyed by x^{-1} sigma x; words are lexicographically least reduced "
    "words with s_0 < s_1 < ... < s_n."
)


class ReportError(AlcoveOrbitsError, ValueError):
    pass


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class OrbitEntry:
    invariant_translation: list[int]
    invariant_finite_word: list[int]
    invariant_word: list[int]
    min_rep_word: list[int]
    min_rep_distance: int
    sample_point: list[str]
    size_in_ball: int


@dataclass
class CensusEntry:
    radius: int
    ball_size: int
    orbit_count: int
    orbits: list[OrbitEntry]


@dataclass
class ClassEntry:
    index: int
    finite_word: list[int]
    finite_class_size: int
    lambda_rep: list[int]
    sigma_translation: list[int]
    sigma_word: list[int]
    elementary_divisors: list[int]
    coset_count: int
    orbit_index: int
    census: CensusEntry


@dataclass
class TotalsRow:
    radius: int
    ball_size: int
    orbit_counts: list[int]


@dataclass
class DecompositionReport:
    type_letter: str
    rank: int
    radius: int
    budget: int
    classes: list[ClassEntry]
    totals: list[TotalsRow]
    convention_note: str = CONVENTION_NOTE
    tool_version: str = __version__
    config_hash: str = ""
    base_point: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        meta = {
            "tool": TOOL_NAME,
            "tool_version": self.tool_version,
            "type": self.type_letter,
            "rank": self.rank,
            "radius": self.radius,
            "budget": self.budget,
            "config_hash": self.config_hash,
            "convention_note": self.convention_note,
            "base_point": self.base_point,
        }
        classes = []
        for c in self.classes:
            d = {k: v for k, v in c.__dict__.items() if k != "census"}
            cen = c.census
            d["census"] = {
                "radius": cen.radius,
                "ball_size": cen.ball_size,
                "orbit_count": cen.orbit_count,
                "orbits": [dict(o.__dict__) for o in cen.orbits],
            }
            classes.append(d)
        totals = [dict(t.__dict__) for t in self.totals]
        return {"meta": meta, "classes": classes, "totals": totals}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any], check: bool = True) -> DecompositionReport:
        try:
            meta = data["meta"]
            classes = []
            for c in data["classes"]:
                cen = c["census"]
                entry = dict(c)
                entry["census"] = CensusEntry(
                    radius=cen["radius"],
                    ball_size=cen["ball_size"],
                    orbit_count=cen["orbit_count"],
                    orbits=[OrbitEntry(**o) for o in cen["orbits"]],
                )
                classes.append(ClassEntry(**entry))
            report = cls(
                type_letter=meta["type"],
                rank=meta["rank"],
                radius=meta["radius"],
                budget=meta["budget"],
                classes=classes,
                totals=[TotalsRow(**t) for t in data["totals"]],
                convention_note=meta["convention_note"],
                tool_version=meta["tool_version"],
                config_hash=meta["config_hash"],
                base_point=list(meta["base_point"]),
            )
        except (KeyError, TypeError) as exc:
            raise ReportError(f"malformed report: {exc}") from exc
        if check:
            report.check()
        return report

    @classmethod
    def from_json(cls, text: str, check: bool = True) -> DecompositionReport:
        return cls.from_dict(json.loads(text), check)

    def check(self) -> None:
        """Internal consistency of a (possibly loaded) report."""
        if [c.index for c in self.classes] != list(range(len(self.classes))):
            raise ReportError("class indices are not 0..k-1 in order")
        if [t.radius for t in self.totals] != list(range(self.radius + 1)):
            raise ReportError("totals must have one row per radius 0..R")
        for t in self.totals:
            if len(t.orbit_counts) != len(self.classes):
                raise ReportError(f"totals row {t.radius} has the wrong number of classes")
        last = self.totals[-1]
        for c in self.classes:
            cen = c.census
            if cen.orbit_count != len(cen.orbits):
                raise ReportError(f"class {c.index}: orbit_count disagrees with orbit list")
            if cen.ball_size != last.ball_size:
                raise ReportError(f"class {c.index}: census ball size {cen.ball_size} != {last.ball_size}")
            if sum(o.size_in_ball for o in cen.orbits) != cen.ball_size:
                raise ReportError(f"class {c.index}: orbit sizes do not sum to the ball size")
            if last.orbit_counts[c.index] != cen.orbit_count:
                raise ReportError(f"class {c.index}: totals row {last.radius} disagrees with census")
        for prev, row in zip(self.totals, self.totals[1:]):
            if any(a > b for a, b in zip(prev.orbit_counts, row.orbit_counts)):
                raise ReportError(f"orbit counts decrease between radius {prev.radius} and {row.radius}")


def config_hash(type_letter: str, rank: int, radius: int, budget: int) -> str:
    payload = json.dumps(
        {"type": type_letter, "rank": rank, "radius": radius, "budget": budget, "version": __version__},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def class_entry(cls: InvolutionClass, census_entry: CensusEntry) -> ClassEntry:
    return ClassEntry(
        index=cls.index,
        finite_word=list(cls.finite_class_rep.word),
        finite_class_size=cls.finite_class_size,
        lambda_rep=list(cls.lambda_rep),
        sigma_translation=list(cls.sigma.translation),
        sigma_word=list(cls.sigma_word),
        elementary_divisors=list(cls.quotient.elementary_divisors),
        coset_count=len(cls.quotient),
        orbit_index=cls.orbit_index,
        census=census_entry,
    )


def _empty_census(radius: int) -> CensusEntry:
    return CensusEntry(radius, 0, 0, [])


def build_classes_report(datum: RootDatum, budget: int | None = None) -> DecompositionReport:
    """Class table only; census fields are left empty."""
    if budget is None:
        budget = DEFAULT_BUDGETS.ball
    G = affine_group(datum)
    classes = classify(datum)
    return DecompositionReport(
        type_letter=datum.type_letter,
        rank=datum.rank,
        radius=0,
        budget=budget,
        classes=[class_entry(c, _empty_census(0)) for c in classes],
        totals=[],
        config_hash=config_hash(datum.type_letter, datum.rank, 0, budget),
        base_point=[_frac(x) for x in G.base_point],
    )


def build_report(
    datum: RootDatum, radius: int, budget: int | None = None, workers: int = 1
) -> DecompositionReport:
    if budget is None:
        budget = DEFAULT_BUDGETS.ball
    G = affine_group(datum)
    classes = classify(datum)
    ball = G.ball(radius, budget)
    dist = [ball.distance[x] for x in ball.elements]
    entries = []
    # new_at[c][r] = number of orbits of class c first met at distance r
    new_at = []
    for c in classes:
        values = invariants(c.sigma, datum, ball.elements, workers)
        cen = census_from_ball(c.sigma, datum, ball, values=values, class_ref=c)
        orbits = [
            OrbitEntry(
                invariant_translation=list(o.invariant.translation),
                invariant_finite_word=list(o.invariant.finite.word),
                invariant_word=list(G.reduced_word(o.invariant)),
                min_rep_word=list(o.min_rep_word),
                min_rep_distance=o.min_rep_distance,
                sample_point=[_frac(x) for x in o.min_rep.sample_point],
                size_in_ball=o.size_in_ball,
            )
            for o in cen.orbits
        ]
        entries.append(
            class_entry(c, CensusEntry(radius, cen.ball_size, cen.orbit_count, orbits))
        )
        counts = [0] * (radius + 1)
        for o in cen.orbits:
            counts[o.min_rep_distance] += 1
        new_at.append(counts)
    totals = []
    for r in range(radius + 1):
        totals.append(
            TotalsRow(
                radius=r,
                ball_size=sum(1 for d in dist if d <= r),
                orbit_counts=[sum(counts[: r + 1]) for counts in new_at],
            )
        )
    report = DecompositionReport(
        type_letter=datum.type_letter,
        rank=datum.rank,
        radius=radius,
        budget=budget,
        classes=entries,
        totals=totals,
        config_hash=config_hash(datum.type_letter, datum.rank, radius, budget),
        base_point=[_frac(x) for x in G.base_point],
    )
    report.check()
    return report


# -- oracle ---------------------------------------------------------------


@dataclass
class OracleLine:
    subject: str
    status: str  # "equal", "refinement", "violation"
    exact: int
    brute: int
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "violation"


@dataclass
class OracleSummary:
    type_letter: str
    rank: int
    radius: int
    conjugator_radius: int
    lines: list[OracleLine]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "meta": {
                "tool": TOOL_NAME,
                "tool_version": __version__,
                "type": self.type_letter,
                "rank": self.rank,
                "radius": self.radius,
                "conjugator_radius": self.conjugator_radius,
                "ok": self.ok,
            },
            "checks": [dict(line.__dict__) for line in self.lines],
        }


def run_oracle(
    datum: RootDatum, radius: int, conjugator_radius: int, budget: int | None = None
) -> OracleSummary:
    """Cross-check the exact classification and censuses against brute force.

    A brute-force part that straddles two exact classes (or two orbit fibers)
    is a violation; fewer exact classes than brute parts is only a refinement.
    """
    G = affine_group(datum)
    classes = classify(datum)
    lines = []

    parts = brute_force_class_census(datum, radius, conjugator_radius, budget)
    witness = ""
    hit = set()
    for part in parts:
        labels = [class_of(x, classes).index for x in part]
        hit.update(labels)
        if len(set(labels)) > 1:
            j = next(k for k, lab in enumerate(labels) if lab != labels[0])
            witness = f"{part[0]} (class {labels[0]}) ~ {part[j]} (class {labels[j]})"
            break
    if witness:
        status = "violation"
    elif len(parts) == len(hit):
        status = "equal"
    else:
        status = "refinement"
    lines.append(OracleLine("involution classes", status, len(hit), len(parts), witness))

    ball = G.ball(radius, budget)
    for c in classes:
        cen = census_from_ball(c.sigma, datum, ball)
        fiber = {}
        for k, part in enumerate(partition_of(cen, ball, datum)):
            for x in part:
                fiber[x] = k
        brute = brute_force_census(c.sigma, datum, radius, conjugator_radius, budget)
        witness = ""
        for part in brute:
            bad = next((x for x in part if fiber[x] != fiber[part[0]]), None)
            if bad is not None:
                witness = f"{part[0]} and {bad} joined by a centralizer element but have different invariants"
                break
        if witness:
            status = "violation"
        elif len(brute) == cen.orbit_count:
            status = "equal"
        else:
            status = "refinement"
        lines.append(OracleLine(f"class {c.index} census", status, cen.orbit_count, len(brute), witness))
    return OracleSummary(datum.type_letter, datum.rank, radius, conjugator_radius, lines)


def datum_of(report: DecompositionReport) -> RootDatum:
    return build_datum(report.type_letter, report.rank)
