"""Family searches over parameterized links, with a cost budget.

Each family maps integer parameters inside bounds to a Brieskorn-Pham
exponent vector.  A search enumerates the family, evaluates the
predicate in exact arithmetic, and returns matching invariant records
deduplicated by canonical key and sorted.  The estimated cost
(2^nvars per Betti sum, Prod(a_i - 1) per signature) is checked
against the budget before any heavy work starts; a search never
silently truncates.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterator, Mapping

from .catalog import InvariantRecord, build_record, record_cost
from .errors import BoundsTooLarge, InvalidInput
from .links import BPExponents
from .spheres import kervaire_classify

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Predicate:
    """Filters applied to each family member.

    min_coprime_fixed asks that the varying parameter be coprime to at
    least that many of the member's fixed exponents; only families with
    a designated varying parameter support it.
    """

    sign: str | None = None
    middle_betti: int | None = None
    rational_sphere: bool = False
    pairwise_coprime: bool = False
    min_coprime_fixed: int | None = None


@dataclass(frozen=True)
class SearchSpec:
    family: str
    bounds: Mapping[str, tuple[int, int]]
    predicate: Predicate = field(default_factory=Predicate)


@dataclass(frozen=True)
class Member:
    params: tuple[tuple[str, int], ...]
    exponents: BPExponents
    # distinct exponents the varying parameter must dodge, and its value
    fixed: tuple[int, ...] | None = None
    varying: int | None = None


@dataclass(frozen=True)
class SearchResult:
    records: tuple[InvariantRecord, ...]
    examined: int
    matched: int
    notes: tuple[str, ...] = ()


def _span(bounds: Mapping[str, tuple[int, int]], key: str, lo_min: int) -> range:
    try:
        lo, hi = bounds[key]
    except KeyError:
        raise InvalidInput("family needs bound %r" % key) from None
    if lo < lo_min or hi < lo:
        raise InvalidInput("bad bound %s=(%d,%d)" % (key, lo, hi))
    return range(lo, hi + 1)


def _bp_box(bounds) -> Iterator[Member]:
    keys = sorted(bounds, key=lambda k: (len(k), k))
    if not keys or any(not k.startswith("a") for k in keys):
        raise InvalidInput("bp-box bounds use keys a0, a1, ...")
    spans = [_span(bounds, k, 2) for k in keys]
    for tup in itertools.product(*spans):
        yield Member(tuple(zip(keys, tup)), BPExponents(tup))


def _family_237m(bounds) -> Iterator[Member]:
    for m in _span(bounds, "m", 2):
        yield Member(
            (("m", m),), BPExponents((2, 3, 7, m)), fixed=(2, 3, 7), varying=m
        )


def _family_kkk1p(bounds) -> Iterator[Member]:
    for k in _span(bounds, "k", 2):
        for p in _span(bounds, "p", 2):
            yield Member(
                (("k", k), ("p", p)),
                BPExponents((k, k, k + 1, p)),
                fixed=(k, k + 1),
                varying=p,
            )


def _family_kkkk1p(bounds) -> Iterator[Member]:
    for k in _span(bounds, "k", 2):
        for p in _span(bounds, "p", 2):
            yield Member(
                (("k", k), ("p", p)),
                BPExponents((k, k, k, k + 1, p)),
                fixed=(k, k + 1),
                varying=p,
            )


def _family_pqr(bounds) -> Iterator[Member]:
    for p in _span(bounds, "p", 2):
        for q in _span(bounds, "q", 2):
            if q <= p or gcd(p, q) != 1:
                continue
            for r in _span(bounds, "r", 2):
                if r <= q or gcd(r, p) != 1 or gcd(r, q) != 1:
                    continue
                yield Member(
                    (("p", p), ("q", q), ("r", r)),
                    BPExponents((p, q, r, p * q * r)),
                )


def _family_kervaire(bounds) -> Iterator[Member]:
    rkeys = sorted(
        (k for k in bounds if k.startswith("r")), key=lambda k: (len(k), k)
    )
    if not rkeys or len(rkeys) % 2:
        raise InvalidInput("kervaire bounds use r1..r2m (even count) and a")
    spans = [_span(bounds, k, 1) for k in rkeys]
    for rs in itertools.product(*spans):
        if any(gcd(x, y) != 1 for x, y in itertools.combinations(rs, 2)):
            continue
        for a in _span(bounds, "a", 2):
            exps = BPExponents((2,) + tuple(2 * x for x in rs) + (a,))
            yield Member(
                tuple(zip(rkeys, rs)) + (("a", a),), exps, fixed=rs, varying=a
            )


FAMILIES = {
    "bp-box": _bp_box,
    "237m": _family_237m,
    "kkk1p": _family_kkk1p,
    "kkkk1p": _family_kkkk1p,
    "pqrpqr": _family_pqr,
    "kervaire": _family_kervaire,
}


def _members(spec: SearchSpec) -> list[Member]:
    try:
        gen = FAMILIES[spec.family]
    except KeyError:
        raise InvalidInput(
            "unknown family %r (have: %s)" % (spec.family, ", ".join(sorted(FAMILIES)))
        ) from None
    return list(gen(spec.bounds))


def _passes(member: Member, pred: Predicate, record: InvariantRecord) -> bool:
    if pred.sign is not None and record.sign != pred.sign:
        return False
    if pred.middle_betti is not None and record.middle_betti != pred.middle_betti:
        return False
    if pred.rational_sphere and record.middle_betti != 0:
        return False
    if pred.pairwise_coprime and not member.exponents.pairwise_coprime():
        return False
    return True


def _coprime_hits(member: Member) -> int:
    return sum(1 for q in set(member.fixed) if gcd(member.varying, q) == 1)


def check_budget(members: list[Member], budget: int) -> int:
    total = sum(record_cost(m.exponents) for m in members)
    if total > budget:
        raise BoundsTooLarge(
            "estimated cost %d exceeds budget %d" % (total, budget)
        )
    return total


def _evaluate(member: Member) -> InvariantRecord:
    record = build_record(member.exponents)
    return record


def run_search(
    spec: SearchSpec, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> SearchResult:
    members = _members(spec)
    pred = spec.predicate

    if pred.min_coprime_fixed is not None:
        if any(m.varying is None for m in members):
            raise InvalidInput(
                "family %r has no varying parameter for min_coprime_fixed"
                % spec.family
            )
        members = [
            m for m in members if _coprime_hits(m) >= pred.min_coprime_fixed
        ]

    check_budget(members, budget)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_evaluate, members))
    else:
        records = [_evaluate(m) for m in members]

    if spec.family == "kervaire":
        # the dimension criterion refines the sphere verdict here
        refined = []
        for member, rec in zip(members, records):
            rs = tuple(x // 2 for x in member.exponents.exponents[1:-1])
            verdict, _ = kervaire_classify(rs, member.varying)
            if rec.middle_betti == 0 and verdict.kind != "undetermined":
                rec = replace(rec, sphere=verdict)
            refined.append(rec)
        records = refined

    matched: dict[str, InvariantRecord] = {}
    examined = 0
    for member, rec in zip(members, records):
        examined += 1
        if _passes(member, pred, rec) and rec.key not in matched:
            matched[rec.key] = rec

    notes = []
    if (
        spec.family == "237m"
        and pred.min_coprime_fixed == 2
        and tuple(spec.bounds.get("m", ())) == (5, 41)
    ):
        notes.append(
            "enumeration finds %d members; a previously published count "
            "for this family is 27" % len(members)
        )

    ordered = tuple(matched[k] for k in sorted(matched))
    return SearchResult(ordered, examined, len(ordered), tuple(notes))


@dataclass(frozen=True)
class SweepResult:
    """bp8 residues realized by L(k,k,k,k+1,p) with p coprime to both
    k and k+1; witnesses maps each residue to its first exponent
    vector in (k, p) order."""

    witnesses: dict[int, tuple[int, ...]]
    examined: int
    skipped: int

    @property
    def distinct(self) -> int:
        return len(self.witnesses)


def seven_sphere_sweep(
    k_max: int, p_max: int, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> SweepResult:
    """Sweep the 5-exponent family for exotic 7-sphere classes."""
    spec = SearchSpec(
        "kkkk1p",
        {"k": (2, k_max), "p": (2, p_max)},
        Predicate(min_coprime_fixed=2),
    )
    members = _members(spec)
    members = [m for m in members if _coprime_hits(m) >= 2]
    check_budget(members, budget)

    def residue(member: Member) -> int | None:
        rec = build_record(member.exponents)
        if rec.middle_betti != 0 or rec.sphere.bp8_residue is None:
            return None
        return rec.sphere.bp8_residue

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            residues = list(pool.map(residue, members))
    else:
        residues = [residue(m) for m in members]

    witnesses: dict[int, tuple[int, ...]] = {}
    skipped = 0
    for member, res in zip(members, residues):
        if res is None:
            skipped += 1
            continue
        witnesses.setdefault(res, member.exponents.exponents)
    return SweepResult(witnesses, len(members), skipped)


__all__ = [
    "DEFAULT_BUDGET",
    "FAMILIES",
    "Predicate",
    "SearchSpec",
    "SearchResult",
    "SweepResult",
    "run_search",
    "seven_sphere_sweep",
]
