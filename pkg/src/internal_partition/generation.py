"""Random regular graphs (configuration model) and a small catalog of named graphs.

Randomness comes from ``numpy.random.Generator(PCG64(seed))``, so a seed
fully determines the output on every platform numpy supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

# Expected pairing attempts grow like exp((d^2 - 1) / 4); above this degree the
# exact rejection sampler is hopeless and "auto" switches to stub repairing.
MAX_PAIRING_DEGREE = 4


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    d: int
    seed: int
    max_attempts: int = 1000
    method: str = "auto"

    def __post_init__(self):
        if (self.n * self.d) % 2:
            raise ValueError(f"n*d must be even (n={self.n}, d={self.d})")
        if not 0 <= self.d < self.n:
            raise ValueError(f"need 0 <= d < n (n={self.n}, d={self.d})")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        if self.method not in ("auto", "pairing", "repair"):
            raise ValueError(f"unknown method {self.method!r}")


def _pairing_attempt(n: int, d: int, rng: np.random.Generator):
    stubs = rng.permutation(np.repeat(np.arange(n), d)).reshape(-1, 2)
    u = stubs.min(axis=1)
    v = stubs.max(axis=1)
    if np.any(u == v):
        return None
    keys = u.astype(np.int64) * n + v
    if np.unique(keys).size != keys.size:
        return None
    return list(zip(u.tolist(), v.tolist()))


def _repair_attempt(n: int, d: int, rng: np.random.Generator):
    # Pair shuffled stubs, keep the pairs that are new simple edges, and
    # re-pair only the leftovers. Fails when the leftovers cannot be paired.
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)
    while stubs.size:
        stubs = rng.permutation(stubs)
        leftover = []
        for s1, s2 in zip(stubs[0::2].tolist(), stubs[1::2].tolist()):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover.extend((s1, s2))
        if leftover and not _pairable(leftover, edges):
            return None
        stubs = np.array(sorted(leftover), dtype=np.int64)
    return sorted(edges)


def _pairable(stubs: list[int], edges: set) -> bool:
    verts = sorted(set(stubs))
    for i, s1 in enumerate(verts):
        for s2 in verts[i + 1:]:
            if (s1, s2) not in edges:
                return True
    return False


def random_regular(spec: GenSpec) -> Graph:
    """Sample a simple d-regular graph on n vertices.

    ``pairing`` draws a uniform perfect matching of the n*d half-edges and
    rejects any multigraph outcome, giving the uniform simple d-regular
    distribution. ``repair`` keeps the valid part of each pairing and
    re-pairs the rest, which is only asymptotically uniform but works for
    large d. ``auto`` uses pairing for d <= MAX_PAIRING_DEGREE.
    """
    n, d = spec.n, spec.d
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if d == 0:
        return Graph.from_edges(n, [])
    method = spec.method
    if method == "auto":
        method = "pairing" if d <= MAX_PAIRING_DEGREE else "repair"
    attempt = _pairing_attempt if method == "pairing" else _repair_attempt
    for _ in range(spec.max_attempts):
        edges = attempt(n, d, rng)
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise GenerationError(
        f"no simple graph after {spec.max_attempts} attempts (n={n}, d={d}, method={method})"
    )


def pairing_acceptance_estimate(d: int) -> float:
    """Asymptotic probability that a random pairing is simple."""
    return math.exp(-(d * d - 1) / 4)


def complete(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(k: int, l: int) -> Graph:
    return Graph.from_edges(k + l, [(i, k + j) for i in range(k) for j in range(l)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant(k: int, offsets) -> Graph:
    edges = set()
    for s in offsets:
        s = int(s) % k
        if s == 0:
            raise ValueError("circulant offset must be nonzero mod k")
        for i in range(k):
            j = (i + s) % k
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(k, sorted(edges))


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def diamond() -> Graph:
    """K4 minus the edge 2-3."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


_CATALOG = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "petersen": (petersen, 0),
    "diamond": (diamond, 0),
}


def named_graph(name: str, *params: int) -> Graph:
    """Build a catalog graph, e.g. ``named_graph("circulant", 9, 1, 3)``."""
    if name == "circulant":
        if len(params) < 2:
            raise ValueError("circulant needs k and at least one offset")
        return circulant(params[0], params[1:])
    if name not in _CATALOG:
        raise ValueError(f"unknown graph name {name!r}")
    fn, arity = _CATALOG[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise ValueError("parameters must be non-negative")
    return fn(*params)
