"""Recursive assembly of maximum triangle-different path families.

Two mutually recursive steps:

* ``mh_to_h(m)`` glues MH families for every submatching of the ground
  matching ``{(1,2), (3,4), ..., (2m-1, 2m)}`` into an H family on ``2m+1``
  vertices, turning the unused matching edges into 1-ladders.
* ``build_mh(k)`` doubles an H family on ``k`` (odd ``k``) or ``k-1`` (even
  ``k``) vertices into an MH family on ``2k+1`` vertices.

All families use the canonical labelling: apex 0, matching pairs ``(2i+1, 2i+2)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping, Sequence

from hampaths.graph_core import HamPath, binomial
from hampaths.weighted_ladder import (
    HFamily,
    LadderSpec,
    MHFamily,
    ProperLadderedGraph,
    Residual,
    canonical_matching,
    mh_base,
    validate,
    z_swap,
)

VertexMap = Mapping[int, int] | Sequence[int]


def identity_terms(n: int) -> list[int]:
    return [binomial(n, k) * binomial(k, k // 2) * 2 ** (n - k) for k in range(n + 1)]


def identity_check(n: int) -> bool:
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(identity_terms(n)) == binomial(2 * n + 1, n)


def mh_to_h(m: int, mh_supplier: Callable[[int], MHFamily] | None = None) -> HFamily:
    """H family on ``2m+1`` vertices, one blueprint group per submatching."""
    supplier = mh_supplier or build_mh
    n = 2 * m + 1
    members: list[ProperLadderedGraph] = []
    for mask in range(1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        rest = [i for i in range(m) if not mask >> i & 1]
        fam = supplier(len(chosen))
        if fam.k != len(chosen) or fam.apex != 0 or fam.matching != canonical_matching(fam.k):
            raise ValueError(f"supplier returned a non-canonical MH family for k={len(chosen)}")
        relabel = [0] * fam.n
        for j, i in enumerate(chosen):
            relabel[2 * j + 1] = 2 * i + 1
            relabel[2 * j + 2] = 2 * i + 2
        extra = tuple(LadderSpec(((2 * i + 1, 2 * i + 2),)) for i in rest)
        for g in fam.members:
            h = g.relabel(relabel, n)
            members.append(ProperLadderedGraph(n, h.apex, h.ladders + extra, h.residual))
    fam_h = HFamily(n, tuple(members))
    assert fam_h.total_paths == fam_h.target, (fam_h.total_paths, fam_h.target)
    return fam_h


def _zigzag(seq: Sequence[int], base: VertexMap, prime: VertexMap) -> list[tuple[int, int]]:
    # odd positions (1-based) keep the unprimed copy first, even positions the primed one
    return [(base[x], prime[x]) if i % 2 == 0 else (prime[x], base[x]) for i, x in enumerate(seq)]


def transform_ladder(lad: LadderSpec, prime: VertexMap, base: VertexMap | None = None) -> LadderSpec:
    """Double a k-ladder into a 2k-ladder whose rails run through the matching edges.

    Rung ``(v, w)`` yields rungs ``(v, w)`` and ``(v', w')``; the rail segment
    below rung ``i`` is taken primed for odd ``i`` and unprimed for even ``i``.
    """
    if lad.k < 1:
        raise ValueError("ladder has no rungs")
    b = base if base is not None else range(max(max(r) for r in lad.rungs) + 1)
    vs = _zigzag(lad.v_rail, b, prime)
    ws = _zigzag(lad.w_rail, b, prime)
    rungs = []
    for (v1, v2), (w1, w2) in zip(vs, ws):
        rungs += [(v1, w1), (v2, w2)]
    return LadderSpec(tuple(rungs))


def transform_path(seq: Sequence[int], prime: VertexMap, base: VertexMap | None = None) -> tuple[int, ...]:
    if not seq:
        return ()
    b = base if base is not None else range(max(seq) + 1)
    return tuple(x for pair in _zigzag(seq, b, prime) for x in pair)


def transform_residual(
    r: Residual, apex_old: int, prime: VertexMap, base: VertexMap | None = None
) -> Residual:
    """Double both residual paths and hang the old apex pair off the shorter one."""
    b = base if base is not None else range(max(r.vertices() + [apex_old]) + 1)
    if r.kind == "empty":
        return Residual.single_edge(b[apex_old], prime[apex_old])
    short = transform_path(r.short, prime, b) + (b[apex_old], prime[apex_old])
    return Residual(short, transform_path(r.long, prime, b))


def _double(g: ProperLadderedGraph, n_new: int, base: VertexMap, prime: VertexMap, apex: int) -> ProperLadderedGraph:
    return ProperLadderedGraph(
        n_new,
        apex,
        tuple(transform_ladder(lad, prime, base) for lad in g.ladders),
        transform_residual(g.residual, g.apex, prime, base),
    )


def transform_preserves_compatibility(
    source: ProperLadderedGraph, image: ProperLadderedGraph, base: VertexMap, prime: VertexMap
) -> bool:
    """Weight-1 pairs keep both copies at weight 1; weight-2 pairs keep exactly one copy at weight 2."""
    img = image.weighted()
    for (u, v), w in source.weighted().weights.items():
        a = img.weight(base[u], base[v])
        c = img.weight(prime[u], prime[v])
        if w == 1 and not (a == 1 and c == 1):
            return False
        if w == 2 and sorted((a or 0, c or 0)) != [0, 2]:
            return False
    return True


def _complete_to_ladder(g: ProperLadderedGraph, new_pair: tuple[int, int]) -> ProperLadderedGraph:
    r = g.residual
    if r.kind == "empty":
        raise ValueError("cannot complete an empty residual to a ladder")
    ext = r.short + new_pair
    assert len(ext) == len(r.long)
    top_down = LadderSpec(tuple(zip(r.long, ext)))
    return ProperLadderedGraph(g.n + 2, g.apex, g.ladders + (top_down,), Residual())


@lru_cache(maxsize=None)
def build_mh(k: int) -> MHFamily:
    """MH family on ``2k+1`` vertices with ``C(k, k//2)`` type paths in total."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k <= 3:
        return mh_base(k)
    return _build_mh_recursive(k)


def _build_mh_recursive(k: int, h_supplier: Callable[[int], HFamily] | None = None) -> MHFamily:
    h_of = h_supplier or (lambda m: mh_to_h(m, build_mh))
    src_n = k if k % 2 else k - 1
    h = h_of((src_n - 1) // 2)
    base = [2 * i + 1 for i in range(src_n)]
    prime = [2 * i + 2 for i in range(src_n)]
    n_doubled = 2 * src_n + 1
    members = []
    for g in h.members:
        img = _double(g, n_doubled, base, prime, 0)
        assert transform_preserves_compatibility(g, img, base, prime)
        assert img.ladder_count == g.ladder_count
        if k % 2 == 0:
            img = _complete_to_ladder(img, (2 * k - 1, 2 * k))
            assert img.ladder_count == g.ladder_count + 1
        problem = validate(img)
        assert problem is None, problem
        members.append(img)
    fam = MHFamily(k, canonical_matching(k), 0, tuple(members))
    assert fam.total_paths == fam.target, (k, fam.total_paths, fam.target)
    return fam


def triangle_blueprints(n: int) -> HFamily:
    if n < 1 or n % 2 == 0:
        raise ValueError("blueprints exist for odd n only")
    return mh_to_h((n - 1) // 2, build_mh)


def construct_triangle_family(n: int) -> list[HamPath]:
    """Pairwise triangle-different Hamiltonian paths on ``n`` vertices, one per balanced bipartition."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n % 2 == 0:
        return [HamPath(p.order + (n - 1,)) for p in construct_triangle_family(n - 1)]
    out: list[HamPath] = []
    for g in triangle_blueprints(n).members:
        out += z_swap(g)
    return out
