import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_has_cycle, brute_has_triangle
from hampaths.family_builder import construct_triangle_family
from hampaths.graph_core import HamPath, path_edges, union
from hampaths.special_families import hc_prime_family
from hampaths.verifier import (
    Predicate,
    certify_tightness,
    end_edge_injectivity,
    end_edges,
    path_bit_arrays,
    sample_pairs,
    triangle_hits,
    verify_pairwise,
)

P = lambda *o: HamPath(o)  # noqa: E731


def test_predicate_parse():
    assert Predicate.parse("triangle").name == "triangle"
    assert Predicate.parse(" cycle:5 ") == Predicate("cycle", 5)
    for bad in ("cycle:2", "cycle:x", "square", ""):
        with pytest.raises(ValueError):
            Predicate.parse(bad)
    with pytest.raises(ValueError):
        Predicate.parse("cycle:6").checker(5)


def test_predicate_forces_odd_cycle():
    assert Predicate.parse("triangle").forces_odd_cycle(4)
    assert Predicate.parse("cycle:5").forces_odd_cycle(6)
    assert not Predicate.parse("cycle:4").forces_odd_cycle(6)
    assert Predicate.parse("ham-cycle").forces_odd_cycle(7)
    assert not Predicate.parse("ham-cycle").forces_odd_cycle(6)


def test_three_paths_on_three_vertices():
    rep = verify_pairwise([P(0, 1, 2), P(0, 2, 1), P(1, 0, 2)])
    assert rep.passed and rep.pairs_checked == 3
    assert rep.bipartitions_injective


def test_n7_full():
    rep = verify_pairwise(construct_triangle_family(7))
    assert rep.passed and rep.pairs_checked == 595 and rep.size == 35


def test_equal_bipartition_fails_odd_cycle():
    a, b = P(0, 1, 2, 3), P(0, 3, 2, 1)
    rep = verify_pairwise([a, b], "odd-cycle")
    assert not rep.passed
    assert rep.failures == [(0, 1, "union lacks odd-cycle")]
    assert not rep.bipartitions_injective
    assert "verdict: FAIL" in rep.to_text()


def test_duplicates_reported_not_raised():
    rep = verify_pairwise([P(0, 1, 2), P(0, 1, 2), P(1, 0, 2)])
    assert (0, 1, "duplicate path") in rep.failures
    assert not rep.passed


def test_mixed_sizes_and_bad_mode():
    with pytest.raises(ValueError):
        verify_pairwise([P(0, 1, 2), P(0, 1, 2, 3)])
    with pytest.raises(ValueError):
        verify_pairwise([P(0, 1, 2)], mode="maybe")


def test_empty_and_singleton():
    assert verify_pairwise([]).pairs_checked == 0
    assert verify_pairwise([P(0, 1)]).passed


def test_report_serialization():
    rep = verify_pairwise(construct_triangle_family(5), mode="sample", samples=7, seed=3)
    d = json.loads(rep.to_json())
    assert d["passed"] and d["samples"] == 7 and d["seed"] == 3 and d["mode"] == "sample"
    assert "pairs pass" in rep.to_text()


def _all_paths(n):
    return [HamPath(o) for o in itertools.permutations(range(n)) if o[0] < o[-1]]


def test_triangle_kernel_against_brute_oracle():
    paths = _all_paths(5)
    e, d = path_bit_arrays(paths)
    rows, cols = zip(*itertools.combinations(range(len(paths)), 2))
    import numpy as np

    got = triangle_hits(e, d, np.array(rows), np.array(cols))
    for t, (i, j) in enumerate(zip(rows, cols)):
        assert got[t] == brute_has_triangle(union(path_edges(paths[i]), path_edges(paths[j])))


@pytest.mark.parametrize("pred", ["triangle", "odd-cycle", "cycle:4", "cycle:5", "ham-cycle"])
def test_full_failures_match_brute_oracle(pred):
    import random

    rng = random.Random(pred)
    fam = rng.sample(_all_paths(5), 12)
    rep = verify_pairwise(fam, pred)
    p = Predicate.parse(pred)
    expected = set()
    for i, j in itertools.combinations(range(len(fam)), 2):
        u = union(path_edges(fam[i]), path_edges(fam[j]))
        if p.kind == "triangle":
            ok = brute_has_triangle(u)
        elif p.kind == "odd-cycle":
            ok = any(brute_has_cycle(u, k) for k in (3, 5))
        elif p.kind == "ham-cycle":
            ok = brute_has_cycle(u, 5)
        else:
            ok = brute_has_cycle(u, p.k)
        if not ok:
            expected.add((i, j))
    assert {(i, j) for i, j, _ in rep.failures} == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 9), st.integers(0, 2**32 - 1))
def test_sample_with_full_count_matches_full(n, seed):
    fam = construct_triangle_family(n)
    total = len(fam) * (len(fam) - 1) // 2
    full = verify_pairwise(fam)
    samp = verify_pairwise(fam, mode="sample", samples=max(total, 1), seed=seed)
    assert full.passed == samp.passed


def test_sample_fallback_finds_planted_failure():
    fam = construct_triangle_family(5) + [P(0, 1, 2, 3, 4)]
    fam = list(dict.fromkeys(fam))
    full = verify_pairwise(fam)
    samp = verify_pairwise(fam, mode="sample", samples=10**4, seed=1)
    assert full.failures == samp.failures


def test_sample_pairs_deterministic_and_valid():
    a = sample_pairs(50, 1000, 9)
    assert a == sample_pairs(50, 1000, 9)
    assert all(0 <= i < j < 50 for i, j in a)


@pytest.mark.parametrize("n", range(3, 11))
def test_triangle_implies_odd_cycle(n):
    fam = construct_triangle_family(n)
    assert verify_pairwise(fam).passed
    assert verify_pairwise(fam, "odd-cycle").passed


def test_certify_tightness():
    c9 = certify_tightness(construct_triangle_family(9))
    assert c9.passed and c9.size == 126
    c4 = certify_tightness(construct_triangle_family(4))
    assert c4.passed and c4.size == 3 == c4.target
    bad = certify_tightness([P(0, 1, 2, 3), P(0, 3, 2, 1)])
    assert not bad.passed and not bad.distinct
    assert not certify_tightness([]).passed
    assert "PASS" in str(c9)


def test_end_edges():
    assert end_edges(P(0, 2, 1)) == ((0, 2), (1, 2))
    assert end_edge_injectivity(hc_prime_family(5))
    assert len(hc_prime_family(5)) * 2 == 20
    assert not end_edge_injectivity([P(0, 1, 2, 3), P(0, 1, 3, 2)])
    # more than binomial(n,2) paths cannot have distinct directed end edges
    assert not end_edge_injectivity(_all_paths(4)[:7])
    assert not end_edge_injectivity([P(0)])
