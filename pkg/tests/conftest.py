import itertools

import pytest

from hampaths.graph_core import EdgeSet

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_has_cycle(g: EdgeSet, k: int) -> bool:
    """Try every k-subset in every cyclic order."""
    for sub in itertools.combinations(range(g.n), k):
        first, rest = sub[0], sub[1:]
        for perm in itertools.permutations(rest):
            cyc = (first,) + perm
            if all(g.has(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                return True
    return False


def brute_has_triangle(g: EdgeSet) -> bool:
    return any(
        g.has(a, b) and g.has(a, c) and g.has(b, c) for a, b, c in itertools.combinations(range(g.n), 3)
    )


def brute_max_clique(adj: list[int]) -> int:
    m = len(adj)
    best = 0
    for r in range(1, m + 1):
        found = False
        for sub in itertools.combinations(range(m), r):
            if all(adj[a] >> b & 1 for a, b in itertools.combinations(sub, 2)):
                found = True
                break
        if not found:
            break
        best = r
    return best


@pytest.fixture
def acceptance_log():
    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())

    return record
