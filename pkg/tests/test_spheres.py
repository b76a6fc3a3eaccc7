"""Brieskorn signatures, Casson invariants and exotic sphere classes."""

import random
from fractions import Fraction
from math import gcd, prod

import pytest

from linkatlas import (
    SignClass,
    bp8_class,
    bp_link,
    brieskorn_signature,
    brieskorn_signature_direct,
    casson_invariant,
    classify_sign,
    is_homology_3_sphere,
    kervaire_classify,
    reciprocal_sum,
)
from linkatlas.errors import (
    DimensionUnsupported,
    InvalidInput,
    NotASphere,
    NotPairwiseCoprime,
)


def test_signature_published_family():
    assert brieskorn_signature((5, 3, 2)).signature == -8
    assert brieskorn_signature((11, 3, 2)).signature == -16
    assert brieskorn_signature((7, 3, 2)).signature == -8
    for k in range(1, 6):
        assert brieskorn_signature((6 * k - 1, 3, 2)).signature == -8 * k


def test_signature_counts_bound():
    res = brieskorn_signature((5, 3, 2))
    assert res.signature == res.positive - res.negative
    assert res.positive + res.negative <= (5 - 1) * (3 - 1) * (2 - 1)


def test_signature_lattice_partition():
    # sigma+ + sigma- + integer points = all interior lattice points
    rng = random.Random(31)
    for _ in range(30):
        exps = [rng.randint(2, 9) for _ in range(3)]
        res = brieskorn_signature(exps)
        total = prod(x - 1 for x in exps)
        integers = sum(
            1
            for i in range(1, exps[0])
            for j in range(1, exps[1])
            for k in range(1, exps[2])
            if (Fraction(i, exps[0]) + Fraction(j, exps[1]) + Fraction(k, exps[2]))
            .denominator == 1
        )
        assert res.positive + res.negative + integers == total


def test_signature_routes_agree():
    rng = random.Random(37)
    for _ in range(25):
        exps = [rng.randint(2, 8) for _ in range(3)]
        assert brieskorn_signature(exps) == brieskorn_signature_direct(exps)
    for _ in range(5):
        exps = [rng.randint(2, 4) for _ in range(5)]
        assert brieskorn_signature(exps) == brieskorn_signature_direct(exps)


def test_signature_five_exponents():
    res = brieskorn_signature((2, 2, 2, 3, 5))
    assert res.signature == 8
    assert res == brieskorn_signature_direct((2, 2, 2, 3, 5))


def test_signature_dimension_guard():
    with pytest.raises(DimensionUnsupported):
        brieskorn_signature((2, 3, 5, 7))
    with pytest.raises(DimensionUnsupported):
        brieskorn_signature_direct((2, 3))


def test_casson_invariant():
    assert casson_invariant((5, 3, 2)) == -1
    assert casson_invariant((17, 3, 2)) == -3
    assert casson_invariant((7, 3, 2)) == -1
    for k in range(1, 6):
        assert casson_invariant((6 * k - 1, 3, 2)) == -k


def test_casson_guards():
    with pytest.raises(NotPairwiseCoprime):
        casson_invariant((6, 10, 15))
    with pytest.raises(DimensionUnsupported):
        casson_invariant((2, 3, 5, 7, 11))


def test_homology_3_sphere():
    assert is_homology_3_sphere((5, 3, 2))
    assert not is_homology_3_sphere((6, 10, 15))
    assert is_homology_3_sphere((7, 3, 2))
    with pytest.raises(DimensionUnsupported):
        is_homology_3_sphere((2, 3, 5, 7))


def test_bp8_class():
    verdict = bp8_class((2, 2, 2, 3, 5))
    assert verdict.kind == "rational_homology_sphere"
    assert verdict.bp8_residue == 1
    with pytest.raises(DimensionUnsupported):
        bp8_class((5, 3, 2))


def test_bp8_requires_sphere():
    # L(2,2,2,4,4) has middle Betti number 2
    from linkatlas import betti

    assert betti(bp_link((2, 2, 2, 4, 4))).middle_betti == 2
    with pytest.raises(NotASphere):
        bp8_class((2, 2, 2, 4, 4))


def test_kervaire_classify():
    verdict, _ = kervaire_classify((3, 5), 7)
    assert verdict.kind == "standard_sphere"
    verdict, _ = kervaire_classify((3, 5), 11)
    assert verdict.kind == "kervaire_sphere"
    verdict, _ = kervaire_classify((3, 5), 4)
    assert verdict.kind == "undetermined"


def test_kervaire_sign_rule():
    # negative exactly when sum 1/r_i < (a-2)/a
    rng = random.Random(41)
    seen_negative = False
    for _ in range(100):
        r1 = rng.randint(1, 9)
        r2 = rng.randint(1, 9)
        if gcd(r1, r2) != 1:
            continue
        a = rng.randint(2, 30)
        _, sign = kervaire_classify((r1, r2), a)
        lhs = Fraction(1, r1) + Fraction(1, r2)
        rhs = Fraction(a - 2, a)
        assert (sign is SignClass.NEGATIVE) == (lhs < rhs)
        seen_negative = seen_negative or sign is SignClass.NEGATIVE
    assert seen_negative


def test_kervaire_guards():
    with pytest.raises(NotPairwiseCoprime):
        kervaire_classify((2, 4), 7)
    with pytest.raises(DimensionUnsupported):
        kervaire_classify((3, 5, 7), 9)
    with pytest.raises(InvalidInput):
        kervaire_classify((0, 5), 7)


def test_kervaire_matches_reciprocal_trichotomy():
    # the sign comes from the full exponent vector (2, 2r_i, a)
    _, sign = kervaire_classify((1, 1), 3)
    assert sign is classify_sign(bp_link((2, 2, 2, 3)))
    assert reciprocal_sum((2, 2, 2, 3)) > 1
    assert sign is SignClass.POSITIVE
