"""Exact maximum clique search on compatibility graphs of Hamiltonian paths.

Vertex sets are Python ints used as bit vectors.  The solver is a
branch-and-bound with greedy colouring bounds in the style of Tomita's MCQ:
candidates are coloured greedily, and a branch is cut as soon as the current
clique plus the number of colours left cannot beat the incumbent.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from hampaths.graph_core import HamPath, balanced_bipartition_count, binomial, path_bipartition, path_edges, union
from hampaths.verifier import Predicate, path_bit_arrays
from hampaths.weighted_ladder import ProperLadderedGraph, is_g_type

MAX_DESK_N = 8


def enumerate_paths(n: int, override: bool = False) -> list[HamPath]:
    """All Hamiltonian paths on ``n`` vertices, one per reversal class, sorted."""
    if n < 1:
        raise ValueError("n must be positive")
    if not override and not 2 <= n <= MAX_DESK_N:
        raise ValueError(f"n={n} outside the desk-scale range 2..{MAX_DESK_N}; pass override=True")
    if n == 1:
        return [HamPath((0,))]
    return [HamPath(p) for p in permutations(range(n)) if p[0] < p[-1]]


@dataclass
class CompatGraph:
    n: int
    paths: list[HamPath]
    adj: list[int]
    predicate: str
    packings: list[tuple[list[int], int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.paths)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def induced(self, keep: Sequence[int]) -> "CompatGraph":
        idx = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in keep:
                if self.adj[v] >> u & 1:
                    row |= 1 << idx[u]
            adj.append(row)
        packings = []
        for sets, r in self.packings:
            moved = []
            for s in sets:
                mask = 0
                for u in keep:
                    if s >> u & 1:
                        mask |= 1 << idx[u]
                moved.append(mask)
            packings.append((moved, r))
        return CompatGraph(self.n, [self.paths[v] for v in keep], adj, self.predicate, packings)


def _rows_to_ints(mat: np.ndarray) -> list[int]:
    packed = np.packbits(mat, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


def compat_matrix(paths: Sequence[HamPath], predicate: str | Predicate) -> np.ndarray:
    pred = predicate if isinstance(predicate, Predicate) else Predicate.parse(predicate)
    m = len(paths)
    mat = np.zeros((m, m), dtype=bool)
    if m == 0:
        return mat
    n = paths[0].n
    if pred.kind == "triangle" or (pred.kind == "cycle" and pred.k == 3):
        e, d = path_bit_arrays(paths)
        for i in range(m):
            mat[i] = ((d[i] & e) | (e[i] & d)).any(axis=1)
    elif pred.kind == "odd-cycle":
        sides = np.array([path_bipartition(p).side for p in paths], dtype=np.int64)
        mat = sides[:, None] != sides[None, :]
    else:
        check = pred.checker(n)
        es = [path_edges(p) for p in paths]
        for i in range(m):
            for j in range(i + 1, m):
                if check(union(es[i], es[j])):
                    mat[i, j] = mat[j, i] = True
    np.fill_diagonal(mat, False)
    return mat


def _classes(keys: Sequence[object]) -> list[int]:
    masks: dict[object, int] = {}
    for i, key in enumerate(keys):
        masks[key] = masks.get(key, 0) | 1 << i
    return list(masks.values())


def predicate_packings(paths: Sequence[HamPath], pred: Predicate) -> list[tuple[list[int], int]]:
    """Independent-set covers implied by the predicate, usable as clique bounds.

    Paths with one bipartition have a bipartite union, so for odd-cycle
    forcing predicates the bipartition classes are independent (one class per
    path).  A union containing a Hamiltonian cycle has no degree-1 vertex, so
    paths sharing an inward-directed end edge are non-adjacent (two classes
    per path).
    """
    if not paths:
        return []
    n = paths[0].n
    out = []
    if pred.forces_odd_cycle(n):
        out.append((_classes([path_bipartition(p).side for p in paths]), 1))
    if n >= 3 and (pred.kind == "ham-cycle" or (pred.kind == "cycle" and pred.k == n)):
        ends: dict[tuple[int, int], int] = {}
        for i, p in enumerate(paths):
            o = p.order
            for e in ((o[0], o[1]), (o[-1], o[-2])):
                ends[e] = ends.get(e, 0) | 1 << i
        out.append((list(ends.values()), 2))
    return out


def build_compat(
    n: int,
    predicate: str | Predicate,
    override: bool = False,
    paths: Sequence[HamPath] | None = None,
    packings: bool = True,
) -> CompatGraph:
    pred = predicate if isinstance(predicate, Predicate) else Predicate.parse(predicate)
    ps = list(paths) if paths is not None else enumerate_paths(n, override)
    pk = predicate_packings(ps, pred) if packings else []
    return CompatGraph(n, ps, _rows_to_ints(compat_matrix(ps, pred)), pred.name, pk)


@dataclass
class CliqueResult:
    size: int
    witness: list[int]
    complete: bool
    upper_bound: int
    nodes: int

    @property
    def status(self) -> str:
        return "exact" if self.complete else "incomplete"


class _BudgetExhausted(Exception):
    pass


def _colour_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colours: list[int] = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            colours.append(colour)
            rest ^= low
            q &= ~adj[v] & ~low
    return order, colours


def _greedy_clique(adj: list[int], cand: int) -> list[int]:
    clique = []
    while cand:
        # most connected remaining candidate, lowest index on ties
        best_v, best_d = -1, -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > best_d:
                best_v, best_d = v, d
            c ^= low
        clique.append(best_v)
        cand &= adj[best_v]
    return clique


class _Solver:
    def __init__(self, adj: list[int], budget: int | None, packings: list[tuple[list[int], int]]):
        self.adj = adj
        self.budget = budget
        self.packings = packings
        self.nodes = 0
        self.best: list[int] = []

    def packing_bound(self, cand: int) -> int:
        bound = cand.bit_count()
        for sets, r in self.packings:
            hit = 0
            for s in sets:
                if s & cand:
                    hit += 1
            bound = min(bound, hit // r)
        return bound

    def expand(self, clique: list[int], cand: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        order, colours = _colour_sort(cand, self.adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colours[idx] <= len(self.best):
                return
            if self.packings and len(clique) + self.packing_bound(cand) <= len(self.best):
                return
            v = order[idx]
            clique.append(v)
            nxt = cand & self.adj[v]
            if nxt:
                self.expand(clique, nxt)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            cand &= ~(1 << v)


def _degree_order(adj: list[int], verts: list[int]) -> list[int]:
    # non-increasing degree, original index breaks ties
    mask = 0
    for v in verts:
        mask |= 1 << v
    return sorted(verts, key=lambda v: (-(adj[v] & mask).bit_count(), v))


def max_clique(g: CompatGraph | list[int], budget: int | None = None, fix_root: bool = False) -> CliqueResult:
    """Maximum clique, exact unless the node ``budget`` runs out.

    With ``fix_root`` the search is restricted to the closed neighbourhood of
    vertex 0; this is exact only for vertex-transitive graphs, which all
    compatibility graphs of Hamiltonian paths are.
    """
    adj_in = g.adj if isinstance(g, CompatGraph) else g
    m = len(adj_in)
    if m == 0:
        return CliqueResult(0, [], True, 0, 0)
    verts = list(range(m))
    root: list[int] = []
    if fix_root:
        root = [0]
        verts = [v for v in range(m) if adj_in[0] >> v & 1]
    order = _degree_order(adj_in, verts)
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        a = adj_in[v]
        while a:
            low = a & -a
            u = low.bit_length() - 1
            if u in pos:
                row |= 1 << pos[u]
            a ^= low
        adj.append(row)
    packings = []
    for sets, r in getattr(g, "packings", []):
        moved = []
        for s_ in sets:
            mask = 0
            for v, i in pos.items():
                if s_ >> v & 1:
                    mask |= 1 << i
            if mask:
                moved.append(mask)
        for s_ in moved:
            if any(adj[i] & s_ for i in range(len(adj)) if s_ >> i & 1):
                raise ValueError("packing set is not independent; bound would be unsound")
        packings.append((moved, r))
    full = (1 << len(order)) - 1
    solver = _Solver(adj, budget, packings)
    solver.best = _greedy_clique(adj, full)
    _, colours = _colour_sort(full, adj)
    upper = len(root) + min(max(colours, default=0), solver.packing_bound(full))
    complete = True
    try:
        if full:
            solver.expand([], full)
    except _BudgetExhausted:
        complete = False
    witness = sorted(root + [order[i] for i in solver.best])
    size = len(witness)
    return CliqueResult(size, witness, complete, size if complete else upper, solver.nodes)


def shuffled(g: CompatGraph, seed: int) -> tuple[CompatGraph, list[int]]:
    """Copy of ``g`` with vertices permuted; also returns new-index -> old-index."""
    perm = list(range(len(g)))
    random.Random(seed).shuffle(perm)
    return g.induced(perm), perm


def g_type_paths(p: ProperLadderedGraph, guard: int = 9) -> list[HamPath]:
    if p.n > guard:
        raise ValueError(f"{p.n} vertices exceeds the enumeration guard {guard}")
    w = p.weighted()
    return [h for h in enumerate_paths(p.n, override=True) if is_g_type(h, w)]


def zswap_optimality_oracle(p: ProperLadderedGraph, guard: int = 9) -> int:
    """Largest pairwise triangle-different set of type paths of ``p``, found exhaustively."""
    cands = g_type_paths(p, guard)
    if not cands:
        return 0
    g = build_compat(p.n, "triangle", paths=cands)
    res = max_clique(g)
    return res.size


# Largest families reported for small ground sets, keyed by (cycle length, n).
# These are lower bounds only, except where a matching upper bound is known.
REPORTED_LOWER_BOUNDS: dict[tuple[int, int], int] = {
    (3, 3): 3, (3, 4): 3, (3, 5): 10, (3, 6): 10, (3, 7): 35, (3, 8): 35, (3, 9): 126,
    (4, 4): 6, (4, 5): 12, (4, 6): 32, (4, 7): 97, (4, 8): 248, (4, 9): 594,
    (5, 5): 10, (5, 6): 10, (5, 7): 35, (5, 8): 35, (5, 9): 126,
    (6, 6): 15, (6, 7): 49, (6, 8): 128, (6, 9): 315,
    (7, 7): 21, (7, 8): 35, (7, 9): 126,
    (8, 8): 28, (8, 9): 135,
    (9, 9): 36,
}


def known_upper_bound(k: int, n: int) -> int | None:
    """Upper bound on pairwise C_k-different paths, when one is known."""
    bounds = []
    if k % 2 == 1:
        bounds.append(balanced_bipartition_count(n))
    if k == n:
        bounds.append(binomial(n, 2))
    return min(bounds) if bounds else None


@dataclass
class TableCell:
    k: int
    n: int
    result: CliqueResult

    @property
    def reported(self) -> int | None:
        return REPORTED_LOWER_BOUNDS.get((self.k, self.n))


def cycle_predicate(k: int) -> str:
    return "triangle" if k == 3 else f"cycle:{k}"


def reproduce_table(max_n: int, budget: int | None = 2_000_000, fix_root: bool = True, min_n: int = 3) -> list[TableCell]:
    cells = []
    for n in range(min_n, max_n + 1):
        paths = enumerate_paths(n, override=True)
        for k in range(3, n + 1):
            g = build_compat(n, cycle_predicate(k), paths=paths)
            cells.append(TableCell(k, n, max_clique(g, budget=budget, fix_root=fix_root)))
    return cells


def format_table(cells: Sequence[TableCell]) -> str:
    """Rows by cycle length, columns by n; each cell is ``size`` plus ``=`` (exact) or ``>=``."""
    ns = sorted({c.n for c in cells})
    ks = sorted({c.k for c in cells})
    by = {(c.k, c.n): c for c in cells}
    width = 10
    head = "n".center(9) + "".join(str(n).center(width) for n in ns)
    lines = [head, "-" * len(head)]
    for k in ks:
        row = f"{k}-cycle".ljust(9)
        for n in ns:
            c = by.get((k, n))
            txt = "" if c is None else (f"{c.result.size}" if c.result.complete else f">={c.result.size}")
            row += txt.center(width)
        lines.append(row)
    lines.append("plain numbers are exact maxima; '>=' marks a search stopped by its node budget")
    return "\n".join(lines)
