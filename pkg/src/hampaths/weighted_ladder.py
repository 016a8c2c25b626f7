"""Weighted blueprints: {1,2}-weighted graphs, ladders and properly laddered graphs.

A Hamiltonian path is *G-type* for a weighted graph G when every weighted pair
sits at exactly that distance along the path.  Two weighted graphs disagreeing
on some pair (weight 1 in one, 2 in the other) force a triangle into the union
of any of their type paths, which is what the whole construction rests on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from hampaths.graph_core import HamPath, binomial


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    weights: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        norm: dict[tuple[int, int], int] = {}
        for (u, v), w in dict(self.weights).items():
            if w not in (1, 2):
                raise ValueError(f"weight {w} on ({u},{v}) is not 1 or 2")
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad pair ({u},{v}) for n={self.n}")
            k = _key(u, v)
            if norm.get(k, w) != w:
                raise ValueError(f"pair {k} carries two different weights")
            norm[k] = w
        object.__setattr__(self, "weights", norm)

    def weight(self, u: int, v: int) -> int | None:
        return self.weights.get(_key(u, v))

    def edges(self, w: int) -> list[tuple[int, int]]:
        return sorted(k for k, x in self.weights.items() if x == w)


def weighted_compatible(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    if g1.n != g2.n:
        raise ValueError(f"weighted graphs on {g1.n} and {g2.n} vertices")
    small, big = sorted((g1.weights, g2.weights), key=len)
    return any(big.get(k, w) != w for k, w in small.items())


def is_g_type(h: HamPath, g: WeightedGraph) -> bool:
    if h.n != g.n:
        return False
    pos = h.positions()
    return all(abs(pos[u] - pos[v]) == w for (u, v), w in g.weights.items())


@dataclass(frozen=True)
class LadderSpec:
    """Rungs listed top to bottom; rung ``i`` is the weight-1 pair ``(v_i, w_i)``."""

    rungs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rungs", tuple((int(a), int(b)) for a, b in self.rungs))

    @property
    def k(self) -> int:
        return len(self.rungs)

    @property
    def v_rail(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.rungs)

    @property
    def w_rail(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.rungs)

    def vertices(self) -> list[int]:
        return [x for r in self.rungs for x in r]

    def weighted_pairs(self) -> list[tuple[int, int, int]]:
        out = [(a, b, 1) for a, b in self.rungs]
        for rail in (self.v_rail, self.w_rail):
            out += [(rail[i], rail[i + 1], 2) for i in range(len(rail) - 1)]
        return out


@dataclass(frozen=True)
class Residual:
    """Residual part: two vertex-disjoint weight-2 paths, ``long`` two vertices longer.

    ``Residual()`` is the empty residual and a single edge is represented with
    ``short=()`` and a two-vertex ``long``.
    """

    short: tuple[int, ...] = ()
    long: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "short", tuple(int(x) for x in self.short))
        object.__setattr__(self, "long", tuple(int(x) for x in self.long))

    @classmethod
    def single_edge(cls, u: int, v: int) -> "Residual":
        return cls((), (u, v))

    @property
    def kind(self) -> str:
        if not self.short and not self.long:
            return "empty"
        if not self.short and len(self.long) == 2:
            return "single-edge"
        return "two-paths"

    def vertices(self) -> list[int]:
        return list(self.short) + list(self.long)

    def weighted_pairs(self) -> list[tuple[int, int, int]]:
        out = []
        for p in (self.short, self.long):
            out += [(p[i], p[i + 1], 2) for i in range(len(p) - 1)]
        return out


@dataclass(frozen=True)
class ProperLadderedGraph:
    n: int
    apex: int
    ladders: tuple[LadderSpec, ...] = ()
    residual: Residual = Residual()

    def __post_init__(self) -> None:
        object.__setattr__(self, "ladders", tuple(self.ladders))

    @property
    def ladder_count(self) -> int:
        return len(self.ladders)

    def weighted_pairs(self) -> list[tuple[int, int, int]]:
        out = []
        for lad in self.ladders:
            out += lad.weighted_pairs()
        return out + self.residual.weighted_pairs()

    def weighted(self) -> WeightedGraph:
        return WeightedGraph(self.n, {(u, v): w for u, v, w in self.weighted_pairs()})

    def relabel(self, mapping: Mapping[int, int] | list[int], n: int | None = None) -> "ProperLadderedGraph":
        m = mapping
        return ProperLadderedGraph(
            self.n if n is None else n,
            m[self.apex],
            tuple(LadderSpec(tuple((m[a], m[b]) for a, b in lad.rungs)) for lad in self.ladders),
            Residual(tuple(m[x] for x in self.residual.short), tuple(m[x] for x in self.residual.long)),
        )


def validate(p: ProperLadderedGraph) -> str | None:
    """Return ``None`` for a well-formed blueprint, else the first violated clause."""
    if p.n % 2 == 0:
        return f"vertex count {p.n} is not odd"
    for i, lad in enumerate(p.ladders):
        if lad.k < 1:
            return f"ladder {i} has no rungs"
    r = p.residual
    if r.short and len(r.long) != len(r.short) + 2:
        return f"residual paths have {len(r.short)} and {len(r.long)} vertices; gap must be 2"
    if not r.short and len(r.long) not in (0, 2):
        return f"residual with empty short path must be empty or one edge, got {len(r.long)} vertices"
    seen: list[int] = [p.apex]
    for lad in p.ladders:
        seen += lad.vertices()
    seen += r.vertices()
    if sorted(seen) != list(range(p.n)):
        dup = sorted({x for x in seen if seen.count(x) > 1})
        if dup:
            return f"apex, ladders and residual overlap on {dup}"
        return f"apex, ladders and residual do not cover 0..{p.n - 1}"
    if len(r.vertices()) % 2:
        return "residual vertex count is odd"
    weights: dict[tuple[int, int], int] = {}
    for u, v, w in p.weighted_pairs():
        k = _key(u, v)
        if weights.setdefault(k, w) != w:
            return f"pair {k} assigned two different weights"
    return None


def _prefix(p: ProperLadderedGraph) -> list[int]:
    r = p.residual
    if r.kind == "empty":
        return [p.apex]
    if r.kind == "single-edge":
        return [r.long[0], p.apex, r.long[1]]
    x, y = r.short, r.long
    out: list[int] = []
    for i in range(len(x)):
        out += [y[i], x[i]]
    return out + [y[-2], p.apex, y[-1]]


def _ladder_walk(lad: LadderSpec, swapped: bool) -> list[int]:
    out: list[int] = []
    for v, w in lad.rungs:
        out += [w, v] if swapped else [v, w]
    return out


def z_swap(p: ProperLadderedGraph) -> list[HamPath]:
    """All ``2**l`` type paths of the blueprint, one per entry-side bit string.

    Bit ``i`` of the string (first ladder = most significant) set means the
    ``i``-th ladder is entered on its w side.
    """
    problem = validate(p)
    if problem is not None:
        raise ValueError(f"invalid blueprint: {problem}")
    head = _prefix(p)
    out = []
    for bits in product((False, True), repeat=p.ladder_count):
        order = list(head)
        for lad, swapped in zip(p.ladders, bits):
            order += _ladder_walk(lad, swapped)
        out.append(HamPath(tuple(order)))
    return out


@dataclass(frozen=True)
class MHFamily:
    """Compatible blueprints on ``2k+1`` vertices sharing a weight-2 matching.

    Canonical labelling: apex 0 and matching pairs ``(2i+1, 2i+2)``.
    """

    k: int
    matching: tuple[tuple[int, int], ...]
    apex: int
    members: tuple[ProperLadderedGraph, ...]

    @property
    def n(self) -> int:
        return 2 * self.k + 1

    @property
    def total_paths(self) -> int:
        return sum(1 << m.ladder_count for m in self.members)

    @property
    def target(self) -> int:
        return binomial(self.k, self.k // 2)


@dataclass(frozen=True)
class HFamily:
    """Compatible blueprints on ``n = 2m+1`` vertices yielding ``C(2m+1, m)`` paths."""

    n: int
    members: tuple[ProperLadderedGraph, ...]

    @property
    def total_paths(self) -> int:
        return sum(1 << m.ladder_count for m in self.members)

    @property
    def target(self) -> int:
        return binomial(self.n, self.n // 2)


def canonical_matching(k: int) -> tuple[tuple[int, int], ...]:
    return tuple((2 * i + 1, 2 * i + 2) for i in range(k))


# Small MH families, vertices x_1..x_{2k+1} relabelled to 0..2k.
G1 = ProperLadderedGraph(3, 0, (), Residual.single_edge(1, 2))
G2 = ProperLadderedGraph(5, 0, (LadderSpec(((1, 3), (2, 4))),), Residual())
G3_1 = ProperLadderedGraph(7, 0, (LadderSpec(((1, 3), (2, 4))),), Residual.single_edge(5, 6))
G3_2 = ProperLadderedGraph(7, 0, (), Residual((5, 6), (1, 2, 4, 3)))
APEX_ONLY = ProperLadderedGraph(1, 0)

_BASE = {0: (APEX_ONLY,), 1: (G1,), 2: (G2,), 3: (G3_1, G3_2)}


def mh_base(k: int) -> MHFamily:
    if k not in _BASE:
        raise ValueError(f"no hard-coded MH family for k={k}; only k <= 3")
    return MHFamily(k, canonical_matching(k), 0, _BASE[k])


def pairwise_compatible(graphs: Iterable[ProperLadderedGraph | WeightedGraph]) -> bool:
    ws = [g.weighted() if isinstance(g, ProperLadderedGraph) else g for g in graphs]
    return all(weighted_compatible(ws[i], ws[j]) for i in range(len(ws)) for j in range(i + 1, len(ws)))
