"""Side constructions: Hamiltonian-cycle-different paths on a prime ground set,
triangle-different trees, and the unrestricted graph version of the problem."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from hampaths.graph_core import EdgeSet, HamPath, num_pairs, pair_index


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def edge_length(a: int, b: int, p: int) -> int:
    d = abs(a - b) % p
    return min(d, p - d)


def hc_prime_family(p: int) -> list[HamPath]:
    """For each length class and each edge of it, the circulant cycle minus that edge."""
    if p <= 2 or not is_prime(p):
        raise ValueError(f"p={p} must be an odd prime")
    out = []
    for length in range(1, (p - 1) // 2 + 1):
        for a in range(p):
            # omit edge {a, a+length}: walk from a+length around to a
            out.append(HamPath(tuple((a + length * (i + 1)) % p for i in range(p))))
    return out


def tree_family(n: int) -> list[EdgeSet]:
    """``2**(n-1) - 1`` spanning trees on ``n`` vertices with a triangle in every pairwise union."""
    if n < 2:
        raise ValueError("trees need at least 2 vertices")
    trees = [[(0, 1)]]
    for new in range(2, n):
        nxt = []
        for t in trees:
            x, y = min(t)
            nxt.append(t + [(x, new)])
            nxt.append(t + [(y, new)])
        nxt.append([(i, new) for i in range(new)])
        trees = nxt
    return [EdgeSet.from_pairs(n, t) for t in trees]


def is_spanning_tree(t: EdgeSet) -> bool:
    if t.count != t.n - 1:
        return False
    adj = t.adjacency()
    seen, stack = 1, [0]
    while stack:
        u = stack.pop()
        new = adj[u] & ~seen
        seen |= new
        while new:
            low = new & -new
            stack.append(low.bit_length() - 1)
            new ^= low
    return seen == (1 << t.n) - 1


def tree_bipartition(t: EdgeSet) -> int:
    """Side-B mask of the unique 2-colouring with vertex 0 on side A."""
    adj = t.adjacency()
    colour = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(t.n):
            if adj[u] >> v & 1 and v not in colour:
                colour[v] = 1 - colour[u]
                stack.append(v)
    return sum(1 << v for v, c in colour.items() if c)


def triangle_masks(n: int) -> list[int]:
    return [
        (1 << pair_index(a, b)) | (1 << pair_index(a, c)) | (1 << pair_index(b, c))
        for a, b, c in combinations(range(n), 3)
    ]


def pairwise_union_triangle_failures(graphs: list[EdgeSet], block: int = 128) -> list[tuple[int, int]]:
    """Pairs ``i < j`` whose union is triangle-free, via neighbourhood-row intersections."""
    if not graphs:
        return []
    n = graphs[0].n
    if n > 64:
        raise ValueError("adjacency rows are limited to 64 vertices")
    rows = np.array([g.adjacency() for g in graphs], dtype=np.uint64)
    bad = []
    for i0 in range(0, len(graphs), block):
        u = rows[i0:i0 + block, None, :] | rows[None, i0:, :]
        hit = np.zeros(u.shape[:2], dtype=bool)
        for a in range(n):
            ua = u[..., a]
            for b in range(a + 1, n):
                adjacent = (ua >> np.uint64(b)) & np.uint64(1)
                hit |= adjacent.astype(bool) & ((ua & u[..., b]) != 0)
        for x, y in zip(*np.nonzero(~hit)):
            i, j = i0 + int(x), i0 + int(y)
            if i < j:
                bad.append((i, j))
    return bad


@dataclass(frozen=True)
class UnionFamilyCounts:
    n: int
    with_triangle: int
    maximal_triangle_free: int

    @property
    def total(self) -> int:
        return self.with_triangle + self.maximal_triangle_free


def classify_graphs(n: int, guard: int = 6) -> tuple[list[int], list[int]]:
    """Edge codes of all labelled graphs on ``n`` vertices containing a triangle,
    and of all maximal triangle-free ones."""
    if n > guard:
        raise ValueError(f"n={n} exceeds the enumeration guard {guard}")
    m = num_pairs(n)
    tri = np.array(triangle_masks(n), dtype=np.int64)
    codes = np.arange(1 << m, dtype=np.int64)
    has_tri = np.zeros(len(codes), dtype=bool)
    for t in tri:
        has_tri |= (codes & t) == t
    free = ~has_tri
    maximal = free.copy()
    for e in range(m):
        bit = np.int64(1 << e)
        absent = (codes & bit) == 0
        # adding a missing edge must create a triangle
        maximal &= ~absent | has_tri[codes | bit]
    return codes[has_tri].tolist(), codes[maximal].tolist()


def union_family_size(n: int, guard: int = 6) -> UnionFamilyCounts:
    with_tri, mtf = classify_graphs(n, guard)
    counts = UnionFamilyCounts(n, len(with_tri), len(mtf))
    if n <= 5:
        fam = [EdgeSet(n, c) for c in with_tri + mtf]
        assert not pairwise_union_triangle_failures(fam), "assembled family has a triangle-free union"
    return counts
