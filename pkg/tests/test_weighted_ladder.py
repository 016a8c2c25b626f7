import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hampaths.graph_core import HamPath, contains_triangle, path_bipartition, path_edges, union
from hampaths.weighted_ladder import (
    APEX_ONLY,
    G1,
    G2,
    G3_1,
    G3_2,
    LadderSpec,
    ProperLadderedGraph,
    Residual,
    WeightedGraph,
    is_g_type,
    mh_base,
    pairwise_compatible,
    validate,
    weighted_compatible,
    z_swap,
)


def x(*ids):
    """1-based labels x_i to 0-based vertex ids."""
    return tuple(i - 1 for i in ids)


def all_paths(n):
    return [HamPath(o) for o in itertools.permutations(range(n)) if n < 2 or o[0] < o[-1]]


# a weighted graph and two of its type paths
TYPED_G = WeightedGraph(5, {x(3, 5): 1, x(2, 3): 2, x(4, 5): 2})
TYPED_H1 = HamPath(x(1, 2, 4, 3, 5))
TYPED_H2 = HamPath(x(1, 4, 2, 5, 3))

# the properly laddered example on 15 vertices
LADDERED_15 = ProperLadderedGraph(
    15,
    0,
    (LadderSpec((x(2, 3),)), LadderSpec((x(4, 5), x(6, 7))), LadderSpec((x(8, 9),))),
    Residual(x(14, 15), x(10, 11, 12, 13)),
)


def test_weighted_graph_rejects_bad_weights():
    with pytest.raises(ValueError):
        WeightedGraph(3, {(0, 1): 3})
    with pytest.raises(ValueError):
        WeightedGraph(3, {(0, 1): 1, (1, 0): 2})


def test_weighted_compatible_examples():
    a = WeightedGraph(4, {(0, 1): 1, (2, 3): 2})
    b = WeightedGraph(4, {(0, 1): 2})
    assert weighted_compatible(a, b) and weighted_compatible(b, a)
    assert not weighted_compatible(a, a)
    assert weighted_compatible(G3_1.weighted(), G3_2.weighted())
    assert G3_1.weighted().weight(*x(3, 5)) == 1
    assert G3_2.weighted().weight(*x(3, 5)) == 2
    with pytest.raises(ValueError):
        weighted_compatible(a, WeightedGraph(5))


def test_is_g_type_examples():
    assert is_g_type(TYPED_H1, TYPED_G)
    assert is_g_type(TYPED_H2, TYPED_G)
    assert is_g_type(HamPath((2, 0, 1)), WeightedGraph(3))
    assert not is_g_type(HamPath((0, 1, 2)), WeightedGraph(3, {(0, 2): 1}))


def test_validate_examples():
    assert validate(LADDERED_15) is None
    assert LADDERED_15.ladder_count == 3
    bad_gap = ProperLadderedGraph(7, 0, (), Residual((1, 2, 3), (4, 5, 6)))
    assert "gap" in validate(bad_gap)
    overlap = ProperLadderedGraph(5, 0, (LadderSpec(((0, 3), (2, 4))),), Residual())
    assert "overlap" in validate(overlap)
    even = ProperLadderedGraph(4, 0, (LadderSpec(((1, 2),)),), Residual())
    assert validate(even) is not None
    for g in (APEX_ONLY, G1, G2, G3_1, G3_2):
        assert validate(g) is None


def test_z_swap_small_blueprints():
    assert z_swap(G1) == [HamPath(x(2, 1, 3))]
    out = z_swap(G2)
    assert out == [HamPath(x(1, 2, 4, 3, 5)), HamPath(x(1, 4, 2, 5, 3))]
    assert contains_triangle(union(path_edges(out[0]), path_edges(out[1])))
    assert union(path_edges(out[0]), path_edges(out[1])).has(*x(1, 2))
    assert union(path_edges(out[0]), path_edges(out[1])).has(*x(1, 4))
    assert z_swap(APEX_ONLY) == [HamPath((0,))]


def test_z_swap_residual_prefix_two_paths():
    # y1 x1 y2 x2 y3 apex y4 for short path x1 x2 and long path y1..y4
    g = ProperLadderedGraph(7, 0, (), Residual((1, 2), (3, 4, 5, 6)))
    assert z_swap(g) == [HamPath((3, 1, 4, 2, 5, 0, 6))]


def test_z_swap_rejects_invalid():
    with pytest.raises(ValueError):
        z_swap(ProperLadderedGraph(7, 0, (), Residual((1, 2, 3), (4, 5, 6))))


@st.composite
def blueprints(draw, max_ladders=3, max_rungs=3, max_short=2):
    ks = draw(st.lists(st.integers(1, max_rungs), max_size=max_ladders))
    kind = draw(st.sampled_from(["empty", "single", "two"]))
    m = draw(st.integers(1, max_short)) if kind == "two" else 0
    res_size = {"empty": 0, "single": 2, "two": 2 * m + 2}[kind]
    n = 1 + 2 * sum(ks) + res_size
    labels = draw(st.permutations(range(n)))
    it = iter(labels)
    apex = next(it)
    ladders = tuple(LadderSpec(tuple((next(it), next(it)) for _ in range(k))) for k in ks)
    if kind == "empty":
        res = Residual()
    elif kind == "single":
        res = Residual.single_edge(next(it), next(it))
    else:
        short = tuple(next(it) for _ in range(m))
        res = Residual(short, tuple(next(it) for _ in range(m + 2)))
    return ProperLadderedGraph(n, apex, ladders, res)


@settings(max_examples=150, deadline=None)
@given(blueprints())
def test_z_swap_properties(g):
    assert validate(g) is None
    paths = z_swap(g)
    w = g.weighted()
    assert len(paths) == 2 ** g.ladder_count == len(set(paths))
    assert all(is_g_type(h, w) for h in paths)
    edges = [path_edges(h) for h in paths]
    for a, b in itertools.combinations(edges, 2):
        assert contains_triangle(union(a, b))
    # residual plus apex sit on the same sides in every output
    res = [g.apex] + g.residual.vertices()
    side_patterns = set()
    for h in paths:
        a, _ = path_bipartition(h).sides()
        side_patterns.add(tuple(v in a for v in res))
    normalized = {p if p[0] else tuple(not s for s in p) for p in side_patterns}
    assert len(normalized) == 1
    # distinct entry choices give distinct bipartitions
    assert len({path_bipartition(h) for h in paths}) == len(paths)


def _random_weighted(rng, n, density=0.3):
    pairs = [p for p in itertools.combinations(range(n), 2) if rng.random() < density]
    return {p: rng.choice((1, 2)) for p in pairs}


def test_compatible_weighted_graphs_force_triangles_exhaustive():
    rng = random.Random(7)
    checked = 0
    for n in (4, 5, 6, 7):
        paths = all_paths(n)
        for _ in range(12 if n < 7 else 4):
            w1 = _random_weighted(rng, n)
            w2 = _random_weighted(rng, n)
            a, b = sorted(rng.sample(range(n), 2))
            w1[(a, b)], w2[(a, b)] = 1, 2
            g1, g2 = WeightedGraph(n, w1), WeightedGraph(n, w2)
            t1 = [path_edges(h) for h in paths if is_g_type(h, g1)]
            t2 = [path_edges(h) for h in paths if is_g_type(h, g2)]
            for e1 in t1:
                for e2 in t2:
                    assert contains_triangle(union(e1, e2))
                    checked += 1
    assert checked > 0


def test_mh_base_counts_and_structure():
    assert [mh_base(k).total_paths for k in range(4)] == [1, 1, 2, 3]
    assert [len(mh_base(k).members) for k in range(4)] == [1, 1, 1, 2]
    assert mh_base(3).members[0].ladder_count == 1 and mh_base(3).members[1].ladder_count == 0
    for k in range(4):
        fam = mh_base(k)
        assert fam.total_paths == fam.target
        assert pairwise_compatible(fam.members)
        for g in fam.members:
            assert g.n == 2 * k + 1 and validate(g) is None
            w = g.weighted()
            assert all(w.weight(a, b) == 2 for a, b in fam.matching)
    with pytest.raises(ValueError):
        mh_base(4)
