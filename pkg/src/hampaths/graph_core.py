"""Paths, edge sets and the pairwise-union detectors.

Edge sets are stored as Python ints used as bit vectors over the unordered
pairs of ``{0, ..., n-1}``.  The pair ``{u, v}`` with ``u < v`` lives at bit
``v*(v-1)//2 + u``; this index is part of the file formats and must not change.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def pair_index(u: int, v: int) -> int:
    if u == v:
        raise ValueError(f"loop ({u},{v}) has no pair index")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_from_index(idx: int) -> tuple[int, int]:
    # inverse of pair_index: largest v with v(v-1)/2 <= idx
    v = (1 + math.isqrt(1 + 8 * idx)) // 2
    while v * (v - 1) // 2 > idx:
        v -= 1
    return idx - v * (v - 1) // 2, v


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class HamPath:
    """A Hamiltonian path on ``{0, ..., n-1}``, stored in canonical orientation.

    A path and its reversal are the same subgraph, so the constructor flips
    ``order`` when needed to make ``order[0] < order[-1]``.
    """

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        order = tuple(int(v) for v in self.order)
        n = len(order)
        if n == 0:
            raise ValueError("a Hamiltonian path needs at least one vertex")
        if sorted(order) != list(range(n)):
            raise ValueError(f"{order} is not a permutation of 0..{n - 1}")
        if n >= 2 and order[0] > order[-1]:
            order = order[::-1]
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return len(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def positions(self) -> list[int]:
        pos = [0] * self.n
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def distance(self, u: int, v: int) -> int:
        pos = self.positions()
        return abs(pos[u] - pos[v])

    def __str__(self) -> str:
        return " ".join(map(str, self.order))


@dataclass(frozen=True)
class EdgeSet:
    n: int
    bits: int = 0

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "EdgeSet":
        bits = 0
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair ({u},{v}) out of range for n={n}")
            bits |= 1 << pair_index(u, v)
        return cls(n, bits)

    @property
    def count(self) -> int:
        return self.bits.bit_count()

    def has(self, u: int, v: int) -> bool:
        return u != v and (self.bits >> pair_index(u, v)) & 1 == 1

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(pair_from_index(low.bit_length() - 1))
            b ^= low
        return sorted(out, key=lambda e: (e[0], e[1]))

    def adjacency(self) -> list[int]:
        """Neighbourhood of every vertex as an ``n``-bit int."""
        adj = [0] * self.n
        for u, v in self.pairs():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency()]

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        return union(self, other)


@dataclass(frozen=True)
class Bipartition:
    """Two-colouring of the vertices; bit ``v`` of ``side`` set means side B.

    Vertex 0 is always on side A.
    """

    n: int
    side: int

    @classmethod
    def from_sides(cls, n: int, side_b: Iterable[int]) -> "Bipartition":
        side = 0
        for v in side_b:
            side |= 1 << v
        if side & 1:
            side ^= (1 << n) - 1
        return cls(n, side)

    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        a = frozenset(v for v in range(self.n) if not (self.side >> v) & 1)
        b = frozenset(v for v in range(self.n) if (self.side >> v) & 1)
        return a, b

    @property
    def balanced(self) -> bool:
        b = self.side.bit_count()
        a = self.n - b
        return sorted((a, b), reverse=True) == [(self.n + 1) // 2, self.n // 2]


def path_edges(p: HamPath) -> EdgeSet:
    o = p.order
    bits = 0
    for i in range(len(o) - 1):
        bits |= 1 << pair_index(o[i], o[i + 1])
    return EdgeSet(p.n, bits)


def union(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    if a.n != b.n:
        raise ValueError(f"edge sets on {a.n} and {b.n} vertices cannot be united")
    return EdgeSet(a.n, a.bits | b.bits)


def contains_triangle(g: EdgeSet) -> bool:
    adj = g.adjacency()
    for u in range(g.n):
        higher = adj[u] >> (u + 1) << (u + 1)
        while higher:
            low = higher & -higher
            v = low.bit_length() - 1
            if adj[u] & adj[v]:
                return True
            higher ^= low
    return False


def contains_cycle_of_length(g: EdgeSet, k: int) -> bool:
    """Exhaustive search for a cycle through exactly ``k`` vertices.

    Each cycle is found from its smallest vertex, extending simple paths over
    larger vertices only.
    """
    if not 3 <= k <= g.n:
        raise ValueError(f"cycle length {k} out of range for n={g.n}")
    adj = g.adjacency()
    if k == 3:
        return contains_triangle(g)

    def extend(start: int, last: int, used: int, depth: int) -> bool:
        if depth == k:
            return bool(adj[last] >> start & 1)
        cand = adj[last] & ~used & ~((1 << (start + 1)) - 1)
        while cand:
            low = cand & -cand
            if extend(start, low.bit_length() - 1, used | low, depth + 1):
                return True
            cand ^= low
        return False

    for s in range(g.n - k + 1):
        if adj[s].bit_count() < 2:
            continue
        if extend(s, s, 1 << s, 1):
            return True
    return False


def contains_odd_cycle(g: EdgeSet) -> bool:
    adj = g.adjacency()
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            nb = adj[u]
            while nb:
                low = nb & -nb
                v = low.bit_length() - 1
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    return True
                nb ^= low
    return False


def contains_hamiltonian_cycle(g: EdgeSet) -> bool:
    if g.n < 3:
        return False
    if min(g.degrees()) < 2:
        return False
    return contains_cycle_of_length(g, g.n)


def path_bipartition(p: HamPath) -> Bipartition:
    return Bipartition.from_sides(p.n, p.order[1::2])


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) needs non-negative arguments")
    if k > n:
        raise ValueError(f"binomial({n}, {k}): k exceeds n")
    return math.comb(n, k)


def balanced_bipartition_count(n: int) -> int:
    """Number of balanced bipartitions of an ``n``-set (sides unordered)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return binomial(n, n // 2)
    return binomial(n, n // 2) // 2


def max_degree(g: EdgeSet) -> int:
    return max(g.degrees(), default=0)


def as_path(order: Sequence[int]) -> HamPath:
    return HamPath(tuple(order))
