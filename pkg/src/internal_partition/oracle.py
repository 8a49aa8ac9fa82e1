"""Exhaustive ground truth for small instances.

Subsets are integer bitmasks. Masks are scanned in ascending order in
numpy chunks; for each vertex the number of neighbors inside a mask is
``popcount(mask & nbrmask[x])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import DemandFunctions, Graph, Partition
from .degeneracy import _threshold

CHUNK = 1 << 16


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_n_partition: int = 24
    max_set_degeneracy: int = 20
    max_n_four_sparse: int = 64

    def __post_init__(self):
        if min(self.max_n_partition, self.max_set_degeneracy, self.max_n_four_sparse) < 1:
            raise ValueError("limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def _nbrmasks(g: Graph, verts=None) -> list[int]:
    """Neighbor bitmasks; with ``verts``, bits index positions in ``verts``."""
    if verts is None:
        return [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
    pos = {v: i for i, v in enumerate(verts)}
    return [sum(1 << pos[u] for u in g.adjacency[v] if u in pos) for v in verts]


def brute_force_partition(g: Graph, dem: DemandFunctions,
                          limits: OracleLimits = DEFAULT_LIMITS) -> Partition | None:
    """First (a,b)-internal partition in ascending bitmask order, or None.

    The bitmask is the A side and A = V, A = {} are skipped. When a == b the
    sides are interchangeable, so vertex 0 is fixed in A and only half the
    masks are scanned.
    """
    n = g.n
    if n > limits.max_n_partition:
        raise OracleSizeError(f"n={n} exceeds max_n_partition={limits.max_n_partition}")
    dem.check_size(g)
    if n < 2:
        return None
    nbr = np.array(_nbrmasks(g), dtype=np.int64)
    a = np.array(dem.a, dtype=np.int64)
    b = np.array(dem.b, dtype=np.int64)
    full = (1 << n) - 1
    symmetric = dem.a == dem.b
    count = (1 << (n - 1)) - 1 if symmetric else full - 1
    for start in range(0, count, CHUNK):
        k = np.arange(start, min(start + CHUNK, count), dtype=np.int64)
        masks = (k << 1) | 1 if symmetric else k + 1
        ok = np.ones(k.size, dtype=bool)
        comp = full ^ masks
        for x in range(n):
            in_a = ((masks >> x) & 1).astype(bool)
            own = np.where(in_a, masks, comp) & nbr[x]
            need = np.where(in_a, a[x], b[x])
            ok &= np.bitwise_count(own) >= need
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            mask = int(masks[hits[0]])
            return Partition.from_set(n, [v for v in range(n) if mask >> v & 1])
    return None


def brute_force_degenerate(g: Graph, S, f, limits: OracleLimits = DEFAULT_LIMITS) -> bool:
    """Check every non-empty K ⊆ S for a vertex with d_K(x) <= f(x)."""
    verts = sorted(set(S))
    s = len(verts)
    if s > limits.max_set_degeneracy:
        raise OracleSizeError(f"|S|={s} exceeds max_set_degeneracy={limits.max_set_degeneracy}")
    if s == 0:
        return True
    thr = _threshold(f, g.n)
    nbr = np.array(_nbrmasks(g, verts), dtype=np.int64)
    total = 1 << s
    for start in range(1, total, CHUNK):
        K = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        has_low = np.zeros(K.size, dtype=bool)
        for i, v in enumerate(verts):
            member = ((K >> i) & 1).astype(bool)
            has_low |= member & (np.bitwise_count(K & nbr[i]) <= thr[v])
        if not has_low.all():
            return False
    return True


def brute_force_internal_subsets(g: Graph, S, f, limits: OracleLimits = DEFAULT_LIMITS):
    """All non-empty f-internal subsets of S, as frozensets."""
    verts = sorted(set(S))
    s = len(verts)
    if s > limits.max_set_degeneracy:
        raise OracleSizeError(f"|S|={s} exceeds max_set_degeneracy={limits.max_set_degeneracy}")
    thr = _threshold(f, g.n)
    nbr = np.array(_nbrmasks(g, verts), dtype=np.int64)
    out = []
    total = 1 << s
    for start in range(1, total, CHUNK):
        K = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        ok = np.ones(K.size, dtype=bool)
        for i, v in enumerate(verts):
            member = ((K >> i) & 1).astype(bool)
            ok &= ~member | (np.bitwise_count(K & nbr[i]) >= thr[v])
        for mask in K[ok].tolist():
            out.append(frozenset(verts[i] for i in range(s) if mask >> i & 1))
    return out


def brute_force_four_sparse(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> bool:
    if g.n > limits.max_n_four_sparse:
        raise OracleSizeError(f"n={g.n} exceeds max_n_four_sparse={limits.max_n_four_sparse}")
    for quad in combinations(range(g.n), 4):
        edges = sum(1 for u, v in combinations(quad, 2) if g.has_edge(u, v))
        if edges > 4:
            return False
    return True
