import random

import pytest

from internal_partition.degeneracy import peel_survivors
from internal_partition.graph import DemandFunctions, Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def induced(g: Graph, keep) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(keep))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in g.edges() if u in idx and v in idx])


def diamond_free_graph(n: int, m: int, seed: int, min_degree: int = 4, triangles: bool = False) -> Graph:
    """Random 4-sparse graph: edges (or triangles) are added in random order
    unless they would create a diamond, then the min_degree core is kept."""
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]

    def creates_diamond(new_edges):
        for u, v in new_edges:
            for x in (u, v):
                for w in adj[x]:
                    if len(adj[x] & adj[w]) >= 2:
                        return True
        return False

    def try_add(new_edges):
        if any(v in adj[u] for u, v in new_edges):
            return False
        for u, v in new_edges:
            adj[u].add(v)
            adj[v].add(u)
        if creates_diamond(new_edges):
            for u, v in new_edges:
                adj[u].discard(v)
                adj[v].discard(u)
            return False
        return True

    added = 0
    for _ in range(40 * m):
        if added >= m:
            break
        if triangles:
            u, v, w = rng.sample(range(n), 3)
            added += 3 * try_add([(u, v), (v, w), (u, w)])
        else:
            u, v = rng.sample(range(n), 2)
            added += try_add([(u, v)])
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
    return induced(g, peel_survivors(g, range(n), min_degree - 1))


def random_tight_demands(g: Graph, rng: random.Random) -> DemandFunctions:
    """Per-vertex a in [2, d-2], b = d - a."""
    a = tuple(rng.randint(2, g.degree(x) - 2) for x in range(g.n))
    return DemandFunctions(a, tuple(g.degree(x) - a[x] for x in range(g.n)))


@pytest.fixture
def rng():
    return random.Random(12345)
