from itertools import combinations, permutations

import pytest

from q2kit.graphs import Graph

ACCEPTANCE = {}


def _canon(n, edges):
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def nonisomorphic_graphs(max_n):
    """One representative per isomorphism class, n = 1..max_n, by brute-force canonical labels."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            key = _canon(n, edges)
            if key not in seen:
                seen.add(key)
                out.append(Graph.from_edges(n, edges))
    return out


@pytest.fixture(scope="session")
def small_graphs_4():
    return nonisomorphic_graphs(4)


@pytest.fixture(scope="session")
def small_graphs_5():
    return nonisomorphic_graphs(5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
