import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_has_triangle
from hampaths.family_builder import (
    _build_mh_recursive,
    build_mh,
    construct_triangle_family,
    identity_check,
    identity_terms,
    mh_to_h,
    transform_ladder,
    transform_path,
    transform_preserves_compatibility,
    transform_residual,
    triangle_blueprints,
)
from hampaths.graph_core import path_bipartition, path_edges, union
from hampaths.weighted_ladder import (
    G1,
    G2,
    LadderSpec,
    ProperLadderedGraph,
    Residual,
    is_g_type,
    mh_base,
    pairwise_compatible,
    validate,
    z_swap,
)


def pascal_central(n):
    """Central entry of row n via Pascal's rule, independent of math.comb."""
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[n // 2]


@pytest.mark.parametrize("n", range(0, 25))
def test_identity(n):
    assert identity_check(n)
    assert sum(identity_terms(n)) == pascal_central(2 * n + 1)


def test_identity_rejects_negative():
    with pytest.raises(ValueError):
        identity_check(-1)


def test_mh_to_h_small():
    h1 = mh_to_h(1)
    assert h1.n == 3 and h1.total_paths == 3
    h2 = mh_to_h(2)
    assert h2.n == 5 and h2.total_paths == 10 and len(h2.members) == 4
    for fam in (h1, h2):
        assert pairwise_compatible(fam.members)
        assert all(validate(g) is None for g in fam.members)


def test_mh_to_h_calls_supplier_once_per_submatching():
    calls = []

    def supplier(k):
        calls.append(k)
        return build_mh(k)

    h = mh_to_h(3, supplier)
    assert len(calls) == 8
    assert sorted(calls) == sorted(bin(m).count("1") for m in range(8))
    assert h.total_paths == 35


def test_mh_to_h_rejects_foreign_supplier():
    with pytest.raises(ValueError):
        mh_to_h(2, lambda k: build_mh(k + 1))


def test_transform_two_rung_ladder():
    # v1=1 w1=2 v2=3 w2=4, primes are +10
    prime = {i: i + 10 for i in range(5)}
    out = transform_ladder(LadderSpec(((1, 2), (3, 4))), prime, range(5))
    assert out.rungs == ((1, 2), (11, 12), (13, 14), (3, 4))


def test_transform_path_zigzags():
    prime = {i: i + 10 for i in range(6)}
    assert transform_path((1, 2, 3), prime, range(6)) == (1, 11, 12, 2, 3, 13)
    assert transform_path((), prime) == ()


def test_transform_residual_cases():
    prime = {i: i + 10 for i in range(7)}
    empty = transform_residual(Residual(), 0, prime, range(7))
    assert empty == Residual.single_edge(0, 10)
    single = transform_residual(Residual.single_edge(1, 2), 0, prime, range(7))
    assert single.short == (0, 10) and single.long == (1, 11, 12, 2)
    two = transform_residual(Residual((1, 2), (3, 4, 5, 6)), 0, prime, range(7))
    assert two.short == (1, 11, 12, 2, 0, 10)
    assert two.long == (3, 13, 14, 4, 5, 15, 16, 6)
    assert len(two.long) == len(two.short) + 2


def test_transform_preserves_compatibility_detects_breakage():
    base = [2 * i + 1 for i in range(5)]
    prime = [2 * i + 2 for i in range(5)]
    from hampaths.family_builder import _double

    img = _double(G2, 11, base, prime, 0)
    assert transform_preserves_compatibility(G2, img, base, prime)
    # swapping in an image of another source breaks the correspondence
    other = _double(ProperLadderedGraph(5, 0, (LadderSpec(((1, 2), (3, 4))),), Residual()), 11, base, prime, 0)
    assert not transform_preserves_compatibility(G2, other, base, prime)


def test_recursive_matches_base_families():
    for k in (1, 2):
        rec = _build_mh_recursive(k)
        assert rec.total_paths == mh_base(k).total_paths
        assert [g.weighted().weights for g in rec.members] == [g.weighted().weights for g in mh_base(k).members]
    assert _build_mh_recursive(1).members[0].weighted().weights == G1.weighted().weights
    assert _build_mh_recursive(2).members[0].weighted().weights == G2.weighted().weights


@pytest.mark.parametrize("k", range(0, 11))
def test_build_mh_invariants(k):
    fam = build_mh(k)
    assert fam.total_paths == pascal_central(k)
    assert fam.matching == tuple((2 * i + 1, 2 * i + 2) for i in range(k))
    for g in fam.members:
        assert g.n == 2 * k + 1 and g.apex == 0
        assert validate(g) is None
        w = g.weighted()
        assert all(w.weight(a, b) == 2 for a, b in fam.matching)
    if k <= 7:
        assert pairwise_compatible(fam.members)


def test_build_mh_rejects_negative():
    with pytest.raises(ValueError):
        build_mh(-1)


def test_triangle_blueprints_rejects_even():
    with pytest.raises(ValueError):
        triangle_blueprints(4)
    with pytest.raises(ValueError):
        construct_triangle_family(0)


@pytest.mark.parametrize("n", range(1, 8))
def test_family_against_brute_triangle_oracle(n):
    fam = construct_triangle_family(n)
    # unordered balanced bipartitions
    assert len(fam) == math.comb(n, n // 2) // (2 if n % 2 == 0 else 1) == pascal_central(n - 1 + n % 2)
    assert len(set(fam)) == len(fam)
    edges = [path_edges(p) for p in fam]
    for a, b in itertools.combinations(edges, 2):
        assert brute_has_triangle(union(a, b))


@pytest.mark.parametrize("n", range(1, 16))
def test_family_bipartitions_distinct_and_balanced(n):
    fam = construct_triangle_family(n)
    parts = [path_bipartition(p) for p in fam]
    assert len(set(parts)) == len(fam) == pascal_central(n - 1 + n % 2)
    assert all(b.balanced for b in parts)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 6).map(lambda m: 2 * m + 1), st.data())
def test_blueprint_paths_are_of_type(n, data):
    h = triangle_blueprints(n)
    g = data.draw(st.sampled_from(h.members))
    w = g.weighted()
    assert all(is_g_type(p, w) for p in z_swap(g))
