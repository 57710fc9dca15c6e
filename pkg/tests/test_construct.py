from __future__ import annotations

import itertools
import json

import pytest

from flagbott.cohomology import Concentrated, bott, weyl_dimension
from flagbott.construct import (
    ASSERTED_CONSEQUENCES,
    Certificate,
    SignPattern,
    SignPatternWarning,
    candidate_L,
    construct_counterexample,
    find_polarization,
    paper_recipe_H,
    sign_pattern,
)
from flagbott.errors import (
    DegenerateSignPattern,
    NoMixedSigns,
    NotDominant,
    RankTooSmall,
    SearchExhausted,
    ZeroCoordinate,
)
from flagbott.intersection import degree, is_very_ample
from flagbott.rootsystem import Weight, build_root_system

from .conftest import SMALL_TYPES


def test_candidate_L_examples(A2):
    assert candidate_L(A2, Weight((0, 0)), 1) == Weight((-2, 1))
    assert candidate_L(A2, Weight((1, 1)), 1) == Weight((-3, 3))
    with pytest.raises(NotDominant):
        candidate_L(A2, Weight((-1, 0)), 1)


@pytest.mark.parametrize("series,rank", SMALL_TYPES + [("C", 3), ("D", 4), ("F", 4)])
def test_candidate_has_h1_of_seed_dimension(series, rank):
    rs = build_root_system(series, rank)
    for lam0 in itertools.product(range(3), repeat=rank):
        lam0 = Weight(lam0)
        for i in range(1, rank + 1):
            r = bott(rs, candidate_L(rs, lam0, i))
            assert isinstance(r, Concentrated)
            assert r.degree == 1
            assert r.dimension == weyl_dimension(rs, lam0)
            assert r.dominantization == lam0


def test_sign_pattern_examples():
    assert sign_pattern(Weight((-2, 1))) == SignPattern((2,), (1,), ())
    assert sign_pattern(Weight((-3, 3))) == SignPattern((2,), (1,), ())
    p = sign_pattern(Weight((0, 1)))
    assert p.zeros == (1,) and not p.mixed
    assert sign_pattern(Weight((-2, 1))).r == 1


def test_find_polarization_examples(A2):
    assert find_polarization(A2, Weight((-2, 1)), 10) == Weight((3, 1))
    assert degree(A2, Weight((-2, 1)), Weight((3, 1))) == 1
    assert find_polarization(A2, Weight((-3, 3)), 10) == Weight((2, 1))
    assert degree(A2, Weight((-3, 3)), Weight((2, 1))) == 9
    with pytest.raises(SearchExhausted) as info:
        find_polarization(A2, Weight((-2, 1)), 2)
    assert info.value.best_degree < 0
    assert info.value.best_degree == max(
        degree(A2, Weight((-2, 1)), Weight(h)) for h in itertools.product((1, 2), repeat=2)
    )
    with pytest.raises(NoMixedSigns):
        find_polarization(A2, Weight((1, 0)), 10)
    with pytest.raises(NoMixedSigns):
        find_polarization(A2, Weight((-1, -1)), 10)


@pytest.mark.parametrize("L", [(-2, 1), (-3, 3), (1, -2), (-5, 2), (4, -1)])
def test_search_returns_minimum_in_order(A2, L):
    L = Weight(L)
    H = find_polarization(A2, L, 12)
    key = (max(H), H.coords)
    for h in itertools.product(range(1, 13), repeat=2):
        if (max(h), h) < key:
            assert degree(A2, L, Weight(h)) <= 0
    assert degree(A2, L, H) > 0 and is_very_ample(A2, H)


def test_paper_recipe(A2):
    assert paper_recipe_H(A2, Weight((-2, 1)), 5) == Weight((1, 5))
    assert degree(A2, Weight((-2, 1)), Weight((1, 5))) == -59
    assert paper_recipe_H(A2, Weight((-2, 1)), 1) == Weight((1, 1))
    with pytest.raises(ZeroCoordinate):
        paper_recipe_H(A2, Weight((0, 1)), 3)


def test_construct_examples(A2):
    c = construct_counterexample(A2, Weight((0, 0)), 1, 10)
    assert (c.L, c.cohomology.dimension, c.H, c.degree_L) == (Weight((-2, 1)), 1, Weight((3, 1)), 1)
    c = construct_counterexample(A2, Weight((0, 0)), 2, 10)
    assert (c.L, c.H, c.degree_L) == (Weight((1, -2)), Weight((1, 3)), 1)
    with pytest.raises(RankTooSmall):
        construct_counterexample(build_root_system("A", 1), Weight((0,)), 1, 10)
    with pytest.raises(NotDominant):
        construct_counterexample(A2, Weight((0, -1)), 1, 10)


def test_zero_coordinates_warn_or_fail():
    A3 = build_root_system("A", 3)
    with pytest.warns(SignPatternWarning):
        c = construct_counterexample(A3)
    assert c.L == Weight((-2, 1, 0)) and c.sign_pattern.zeros == (3,)
    assert c.paper_recipe_H is None and c.validate() == []
    with pytest.raises(DegenerateSignPattern):
        construct_counterexample(A3, strict=True)


@pytest.mark.parametrize("series,rank", SMALL_TYPES + [("C", 3), ("D", 4)])
def test_regular_seed_certificates_revalidate(series, rank):
    rs = build_root_system(series, rank)
    for i in range(1, rank + 1):
        c = construct_counterexample(rs, rs.rho(), i, 16, strict=True)
        assert c.validate() == []
        assert c.degree_L > 0 and c.slope_check
        again = Certificate.from_dict(json.loads(c.to_json()))
        assert again == c and again.validate() == []


def test_tampered_certificate_is_rejected(A2):
    data = construct_counterexample(A2).to_dict()
    for field, value in [("degree", 2), ("H", [0, 1]), ("L", [-2, 2]), ("h1_dimension", 3)]:
        bad = dict(data, **{field: value})
        assert Certificate.from_dict(bad).validate(), field
    bad = dict(data, asserted_consequences="V splits")
    assert Certificate.from_dict(bad).validate()


def test_certificate_json_schema(A2):
    d = construct_counterexample(A2).to_dict()
    assert list(d) == [
        "group", "dim", "lambda0", "reflection", "L", "h1_dimension", "concentration_degree",
        "sign_pattern", "H", "degree", "paper_recipe", "asserted_consequences",
    ]
    assert list(d["sign_pattern"]) == ["positives", "negatives", "zeros"]
    assert list(d["paper_recipe"]) == ["H", "degree", "N"]
    assert d["asserted_consequences"] == ASSERTED_CONSEQUENCES
    assert "asserted, not computed" in construct_counterexample(A2).render()
