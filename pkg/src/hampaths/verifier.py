"""Pairwise verification of path families and the tightness certificates."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from hampaths.graph_core import (
    EdgeSet,
    HamPath,
    balanced_bipartition_count,
    contains_cycle_of_length,
    contains_hamiltonian_cycle,
    contains_odd_cycle,
    contains_triangle,
    num_pairs,
    pair_index,
    path_bipartition,
    path_edges,
    union,
)


@dataclass(frozen=True)
class Predicate:
    """A union property: ``triangle``, ``odd-cycle``, ``cycle:K`` or ``ham-cycle``."""

    kind: str
    k: int | None = None

    @classmethod
    def parse(cls, text: str) -> "Predicate":
        text = text.strip()
        if text in ("triangle", "odd-cycle", "ham-cycle"):
            return cls(text)
        if text.startswith("cycle:"):
            try:
                k = int(text[6:])
            except ValueError:
                raise ValueError(f"bad cycle length in {text!r}") from None
            if k < 3:
                raise ValueError(f"cycle length must be at least 3, got {k}")
            return cls("cycle", k)
        raise ValueError(f"unknown predicate {text!r}")

    @property
    def name(self) -> str:
        return f"cycle:{self.k}" if self.kind == "cycle" else self.kind

    def forces_odd_cycle(self, n: int) -> bool:
        if self.kind in ("triangle", "odd-cycle"):
            return True
        if self.kind == "ham-cycle":
            return n % 2 == 1
        return self.k % 2 == 1

    def checker(self, n: int) -> Callable[[EdgeSet], bool]:
        if self.kind == "triangle":
            return contains_triangle
        if self.kind == "odd-cycle":
            return contains_odd_cycle
        if self.kind == "ham-cycle":
            return contains_hamiltonian_cycle
        if self.k > n:
            raise ValueError(f"cycle:{self.k} impossible on {n} vertices")
        k = self.k
        return lambda g: contains_cycle_of_length(g, k)

    def __str__(self) -> str:
        return self.name


@dataclass
class VerifyReport:
    size: int
    predicate: str
    mode: str
    samples: int | None
    seed: int | None
    pairs_checked: int
    failures: list[tuple[int, int, str]] = field(default_factory=list)
    bipartitions_injective: bool = False
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["failures"] = [list(f) for f in self.failures]
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self, max_failures: int = 20) -> str:
        ok = self.pairs_checked - len({(i, j) for i, j, _ in self.failures})
        mode = self.mode if self.mode == "full" else f"sample:{self.samples} seed={self.seed}"
        lines = [
            f"family size: {self.size}",
            f"predicate: {self.predicate}",
            f"mode: {mode}",
            f"{ok}/{self.pairs_checked} pairs pass",
            f"bipartitions injective: {'yes' if self.bipartitions_injective else 'no'}",
            f"elapsed: {self.elapsed:.3f} s",
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
        ]
        for i, j, why in self.failures[:max_failures]:
            lines.append(f"  failure: paths {i} and {j}: {why}")
        if len(self.failures) > max_failures:
            lines.append(f"  ... {len(self.failures) - max_failures} more failures")
        return "\n".join(lines)


def _words(bits: int, w: int) -> list[int]:
    mask = (1 << 64) - 1
    return [(bits >> (64 * i)) & mask for i in range(w)]


def path_bit_arrays(family: Sequence[HamPath]) -> tuple[np.ndarray, np.ndarray]:
    """Edge and distance-2 pair sets of every path, as ``(N, W)`` uint64 word arrays."""
    n = family[0].n
    w = max(1, -(-num_pairs(n) // 64))
    edges = np.zeros((len(family), w), dtype=np.uint64)
    dist2 = np.zeros((len(family), w), dtype=np.uint64)
    for r, p in enumerate(family):
        o = p.order
        e = d = 0
        for i in range(n - 1):
            e |= 1 << pair_index(o[i], o[i + 1])
        for i in range(n - 2):
            d |= 1 << pair_index(o[i], o[i + 2])
        edges[r] = _words(e, w)
        dist2[r] = _words(d, w)
    return edges, dist2


def triangle_hits(edges: np.ndarray, dist2: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Whether the union of paths ``rows[t]`` and ``cols[t]`` has a triangle.

    Each path is triangle-free, so a union triangle uses two consecutive edges
    of one path plus the edge closing them in the other: some distance-2 pair
    of either path must be an edge of the other.
    """
    hit = (dist2[rows] & edges[cols]) | (edges[rows] & dist2[cols])
    return hit.any(axis=1)


def _triangle_full(edges: np.ndarray, dist2: np.ndarray, block: int = 64) -> list[tuple[int, int]]:
    n = len(edges)
    bad: list[tuple[int, int]] = []
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        e, d = edges[i0:i1, None, :], dist2[i0:i1, None, :]
        hit = ((d & edges[None, i0:]) | (e & dist2[None, i0:])).any(axis=2)
        # keep only j > i
        hit |= np.tril(np.ones(hit.shape, dtype=bool))
        for a, b in zip(*np.nonzero(~hit)):
            bad.append((i0 + int(a), i0 + int(b)))
    return bad


def sample_pairs(size: int, count: int, seed: int) -> list[tuple[int, int]]:
    rng = np.random.default_rng(seed)
    i = rng.integers(0, size, count)
    j = rng.integers(0, size - 1, count)
    j = j + (j >= i)
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    return list(zip(lo.tolist(), hi.tolist()))


def verify_pairwise(
    family: Sequence[HamPath],
    predicate: str | Predicate = "triangle",
    mode: str = "full",
    samples: int = 0,
    seed: int = 0,
) -> VerifyReport:
    """Check every (``mode="full"``) or ``samples`` random (``mode="sample"``) pairs.

    Duplicated paths are reported as failures, never raised.
    """
    t0 = time.perf_counter()
    pred = predicate if isinstance(predicate, Predicate) else Predicate.parse(predicate)
    family = list(family)
    size = len(family)
    if size and len({p.n for p in family}) != 1:
        raise ValueError("family mixes paths on different vertex counts")
    if mode not in ("full", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    n = family[0].n if family else 0
    check = pred.checker(n) if family else None
    total = num_pairs(size)

    # every copy of a repeated path collides with every other copy
    duplicates: set[tuple[int, int]] = set()
    groups: dict[HamPath, list[int]] = {}
    for idx, p in enumerate(family):
        groups.setdefault(p, []).append(idx)
    for idxs in groups.values():
        duplicates.update((a, b) for x, a in enumerate(idxs) for b in idxs[x + 1:])

    failures: list[tuple[int, int, str]] = [(i, j, "duplicate path") for i, j in duplicates]
    exhaustive = mode == "full" or samples >= total
    reason = f"union lacks {pred.name}"

    if size >= 2 and exhaustive:
        pairs_checked = total
        if pred.kind == "triangle":
            e, d = path_bit_arrays(family)
            bad = _triangle_full(e, d)
        elif pred.kind == "odd-cycle":
            # union of two spanning paths is connected: bipartite iff same colouring
            sides = [path_bipartition(p).side for p in family]
            bad = [(i, j) for i in range(size) for j in range(i + 1, size) if sides[i] == sides[j]]
        else:
            es = [path_edges(p) for p in family]
            bad = [(i, j) for i in range(size) for j in range(i + 1, size) if not check(union(es[i], es[j]))]
        failures += [(i, j, reason) for i, j in bad if (i, j) not in duplicates]
    elif size >= 2:
        pairs = sample_pairs(size, samples, seed)
        pairs_checked = len(pairs)
        if pred.kind == "triangle":
            e, d = path_bit_arrays(family)
            rows = np.fromiter((i for i, _ in pairs), dtype=np.int64, count=len(pairs))
            cols = np.fromiter((j for _, j in pairs), dtype=np.int64, count=len(pairs))
            ok = np.empty(len(pairs), dtype=bool)
            for s in range(0, len(pairs), 1 << 18):
                ok[s:s + (1 << 18)] = triangle_hits(e, d, rows[s:s + (1 << 18)], cols[s:s + (1 << 18)])
            bad = {pairs[t] for t in np.nonzero(~ok)[0].tolist()}
        else:
            es = [path_edges(p) for p in family]
            bad = {(i, j) for i, j in pairs if not check(union(es[i], es[j]))}
        failures += [(i, j, reason) for i, j in bad if (i, j) not in duplicates]
    else:
        pairs_checked = 0

    failures.sort()
    sides = {path_bipartition(p).side for p in family}
    return VerifyReport(
        size=size,
        predicate=pred.name,
        mode="full" if mode == "full" else "sample",
        samples=None if mode == "full" else samples,
        seed=None if mode == "full" else seed,
        pairs_checked=pairs_checked,
        failures=failures,
        bipartitions_injective=len(sides) == size,
        elapsed=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class TightnessCertificate:
    passed: bool
    size: int
    target: int
    all_balanced: bool
    distinct: bool

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"tightness {verdict}: size {self.size}, balanced bipartitions {self.target}, "
            f"all balanced={self.all_balanced}, distinct={self.distinct}"
        )


def certify_tightness(family: Sequence[HamPath]) -> TightnessCertificate:
    """Size equals the number of balanced bipartitions and no bipartition repeats.

    Two paths with one bipartition have a bipartite union, so a family passing
    this is optimal for every predicate that forces an odd cycle.
    """
    family = list(family)
    if not family:
        return TightnessCertificate(False, 0, 0, False, False)
    n = family[0].n
    parts = [path_bipartition(p) for p in family]
    balanced = all(b.balanced for b in parts) and all(p.n == n for p in family)
    distinct = len(set(parts)) == len(parts)
    target = balanced_bipartition_count(n)
    return TightnessCertificate(balanced and distinct and len(family) == target, len(family), target, balanced, distinct)


def end_edges(p: HamPath) -> tuple[tuple[int, int], tuple[int, int]]:
    o = p.order
    return (o[0], o[1]), (o[-1], o[-2])


def end_edge_injectivity(family: Sequence[HamPath]) -> bool:
    """All ``2*len(family)`` inward-directed terminal edges are distinct."""
    seen: set[tuple[int, int]] = set()
    for p in family:
        if p.n < 2:
            return False
        for e in end_edges(p):
            if e in seen:
                return False
            seen.add(e)
    return True
