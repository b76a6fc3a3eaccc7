"""Family searches, budget refusal and the seven-sphere sweep."""

import pytest

from linkatlas import (
    BoundsTooLarge,
    Predicate,
    SearchSpec,
    betti,
    bp_link,
    run_search,
    seven_sphere_sweep,
)
from linkatlas.errors import InvalidInput
from linkatlas.search import check_budget, _members


def test_237m_positive_count():
    # 1/2 + 1/3 + 1/7 + 1/m > 1 for every m up to 41
    spec = SearchSpec("237m", {"m": (5, 41)}, Predicate(sign="positive"))
    result = run_search(spec)
    assert result.examined == 37
    assert result.matched == 37


def test_237m_coprime_count_and_note():
    spec = SearchSpec(
        "237m", {"m": (5, 41)}, Predicate(min_coprime_fixed=2)
    )
    result = run_search(spec)
    assert result.matched == 28
    assert result.examined == 28
    assert any("27" in note for note in result.notes)


def test_237m_coprime_matches_brute_force():
    from math import gcd

    expected = sum(
        1
        for m in range(5, 42)
        if sum(1 for q in (2, 3, 7) if gcd(m, q) == 1) >= 2
    )
    spec = SearchSpec("237m", {"m": (5, 41)}, Predicate(min_coprime_fixed=2))
    assert run_search(spec).matched == expected


def test_pqr_family_member():
    spec = SearchSpec(
        "pqrpqr", {"p": (2, 2), "q": (3, 3), "r": (11, 11)}, Predicate()
    )
    result = run_search(spec)
    assert result.matched == 1
    rec = result.records[0]
    assert rec.key == "bp:2,3,11,66"
    assert rec.middle_betti == 20


def test_pqr_family_skips_non_coprime():
    spec = SearchSpec(
        "pqrpqr", {"p": (2, 4), "q": (3, 6), "r": (5, 7)}, Predicate()
    )
    members = _members(spec)
    triples = [tuple(v for _, v in m.params) for m in members]
    assert (2, 4, 5) not in [t[:3] for t in triples]
    assert all(len({p, q, r}) == 3 for p, q, r in triples)


def test_bp_box_dedupes_permutations():
    spec = SearchSpec("bp-box", {"a0": (2, 3), "a1": (2, 3)}, Predicate())
    result = run_search(spec)
    assert result.examined == 4
    # (2,3) and (3,2) share the canonical key bp:2,3
    assert result.matched == 3
    assert [r.key for r in result.records] == ["bp:2,2", "bp:2,3", "bp:3,3"]


def test_search_deterministic_and_threaded():
    spec = SearchSpec("237m", {"m": (5, 30)}, Predicate(sign="positive"))
    a = run_search(spec)
    b = run_search(spec)
    c = run_search(spec, threads=4)
    stripped = lambda res: [(r.key, r.middle_betti, r.sign) for r in res.records]
    assert stripped(a) == stripped(b) == stripped(c)


def test_search_budget_refusal():
    spec = SearchSpec("237m", {"m": (5, 41)}, Predicate())
    with pytest.raises(BoundsTooLarge):
        run_search(spec, budget=10)


def test_budget_estimate_counts_signature_cost():
    spec = SearchSpec("bp-box", {"a0": (5, 5), "a1": (3, 3), "a2": (2, 2)}, Predicate())
    members = _members(spec)
    # 2^3 for the Betti sum plus 4*2*1 lattice points
    assert check_budget(members, 10**6) == 8 + 8


def test_min_coprime_fixed_needs_varying_parameter():
    spec = SearchSpec(
        "bp-box", {"a0": (2, 3), "a1": (2, 3)}, Predicate(min_coprime_fixed=1)
    )
    with pytest.raises(InvalidInput):
        run_search(spec)


def test_unknown_family_rejected():
    with pytest.raises(InvalidInput):
        run_search(SearchSpec("nope", {"m": (2, 3)}, Predicate()))


def test_kervaire_family_verdicts():
    spec = SearchSpec(
        "kervaire",
        {"r1": (3, 3), "r2": (5, 5), "a": (7, 11)},
        Predicate(),
    )
    result = run_search(spec)
    # refinement only applies to rational homology spheres with odd a
    for rec in result.records:
        if rec.middle_betti != 0:
            assert rec.sphere.kind == "not_a_sphere"
        else:
            assert rec.sphere.kind in (
                "standard_sphere", "kervaire_sphere", "rational_homology_sphere"
            )
    assert len(result.records) == 5


def test_tiny_sweep_is_incomplete():
    sweep = seven_sphere_sweep(2, 3)
    assert sweep.distinct < 28


def test_sweep_witnesses_are_spheres():
    sweep = seven_sphere_sweep(3, 40)
    assert sweep.distinct >= 1
    for residue, exps in sweep.witnesses.items():
        assert 0 <= residue < 28
        assert betti(bp_link(exps)).middle_betti == 0


def test_sweep_threaded_agrees():
    a = seven_sphere_sweep(3, 60)
    b = seven_sphere_sweep(3, 60, threads=4)
    assert a.witnesses == b.witnesses
    assert a.examined == b.examined
