"""Near-bisection local search for (a,b)-internal partitions.

The search minimizes the total demand shortfall

    sum over x in A of (a(x) - d_A(x))^+  +  sum over x in B of (b(x) - d_B(x))^+

whose zeros are exactly the (a,b)-internal partitions. Each iteration either
restores balance (a random vertex moves from the larger side when
||A| - n/2| exceeds the slack) or switches the under-served vertex whose
switch lowers the shortfall the most.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import A_SIDE, DemandFunctions, Graph, Partition


def default_slack(g: Graph) -> int:
    """ceil(log_d n) with d the maximum degree, clamped to [1, (n-1)//2].

    The upper clamp keeps both sides non-empty under the balance rule.
    """
    n = g.n
    d = max(g.degrees(), default=0)
    c = math.ceil(math.log(n) / math.log(d) - 1e-12) if d >= 2 and n > 1 else 1
    return max(1, min(c, (n - 1) // 2))


@dataclass(frozen=True)
class HeuristicConfig:
    seed: int = 0
    max_iters: int | None = None  # default 50 * n
    balance_slack: int | None = None  # default default_slack(g)
    kick: str = "random_big_side"
    tie_break: str = "lowest"  # or "random" (seeded)
    tabu: bool = True  # a kicked vertex may not switch straight back
    record_trace: bool = False

    def __post_init__(self):
        if self.max_iters is not None and self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.balance_slack is not None and self.balance_slack < 1:
            raise ValueError("balance_slack must be >= 1")
        if self.kick != "random_big_side":
            raise ValueError(f"unknown kick policy {self.kick!r}")
        if self.tie_break not in ("lowest", "random"):
            raise ValueError(f"unknown tie_break {self.tie_break!r}")


@dataclass
class HeuristicResult:
    """``final_objective`` is the shortfall plus any excess imbalance; 0 iff converged."""

    partition: Partition | None
    iterations: int
    converged: bool
    final_objective: int
    kicks: int = 0
    escapes: int = 0
    # (kind, vertex, objective after) per iteration when record_trace is set
    trace: list[tuple[str, int, int]] = field(default_factory=list)


def objective_violation(g: Graph, p: Partition, dem: DemandFunctions) -> int:
    """Total shortfall of own-side degree against the side's demand."""
    dem.check_size(g)
    side = p.side
    total = 0
    for x, nbrs in enumerate(g.adjacency):
        own = sum(1 for u in nbrs if side[u] == side[x])
        need = dem.a[x] if side[x] == A_SIDE else dem.b[x]
        total += max(need - own, 0)
    return total


class _State:
    """Incremental bookkeeping for one run: sides, own-side degrees, shortfall."""

    def __init__(self, g: Graph, dem: DemandFunctions, side: np.ndarray):
        self.n = g.n
        self.deg = np.array(g.degrees(), dtype=np.int64)
        self.indptr = np.concatenate(([0], np.cumsum(self.deg)))
        self.indices = np.array([u for nbrs in g.adjacency for u in nbrs], dtype=np.int64)
        self.src = np.repeat(np.arange(self.n), self.deg)
        self.demand = np.stack([np.array(dem.a, dtype=np.int64), np.array(dem.b, dtype=np.int64)])
        self.side = side.astype(np.int64)
        same = self.side[self.src] == self.side[self.indices]
        self.own = np.bincount(self.src, weights=same, minlength=self.n).astype(np.int64)
        self.size_a = int(np.count_nonzero(self.side == A_SIDE))

    def need(self) -> np.ndarray:
        return self.demand[self.side, np.arange(self.n)]

    def objective(self) -> int:
        return int(np.maximum(self.need() - self.own, 0).sum())

    def deltas(self) -> np.ndarray:
        """Shortfall change if each vertex switched sides."""
        need = self.need()
        own = self.own
        # Seen from a switching neighbor: a same-side u loses one own neighbor,
        # an opposite-side u gains one.
        lose = (own <= need).astype(np.int64)
        gain = -(own < need).astype(np.int64)
        dst = self.indices
        per_edge = np.where(self.side[self.src] == self.side[dst], lose[dst], gain[dst])
        nbr = np.bincount(self.src, weights=per_edge, minlength=self.n).astype(np.int64)
        other_need = self.demand[1 - self.side, np.arange(self.n)]
        self_delta = np.maximum(other_need - (self.deg - own), 0) - np.maximum(need - own, 0)
        return self_delta + nbr

    def switch(self, v: int):
        nbrs = self.indices[self.indptr[v]:self.indptr[v + 1]]
        same = self.side[nbrs] == self.side[v]
        self.own[nbrs] += np.where(same, -1, 1)
        self.own[v] = self.deg[v] - self.own[v]
        self.size_a += 1 if self.side[v] != A_SIDE else -1
        self.side[v] ^= 1


def local_search(g: Graph, dem: DemandFunctions, cfg: HeuristicConfig = HeuristicConfig()) -> HeuristicResult:
    """Run one seeded search; non-convergence is reported, not raised.

    Per iteration, with slack c:

    * ``kick``: if ||A| - n/2| > c, or no under-served vertex can switch
      without breaking that bound, a uniformly random vertex of the larger
      side switches;
    * ``move``: otherwise the admissible under-served vertex with the best
      shortfall change switches;
    * ``escape``: if even that best change is an increase, a uniformly
      random admissible under-served vertex switches instead.

    With ``tabu`` the vertex switched by the previous kick or escape is not
    a candidate in the next iteration.
    """
    n = g.n
    if n < 4:
        raise ValueError("local search needs at least 4 vertices")
    dem.check_size(g)
    max_iters = cfg.max_iters if cfg.max_iters is not None else 50 * n
    slack = cfg.balance_slack if cfg.balance_slack is not None else default_slack(g)
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    side = np.ones(n, dtype=np.int64)
    side[rng.permutation(n)[: n // 2]] = A_SIDE
    st = _State(g, dem, side)
    obj = st.objective()
    it = kicks = escapes = 0
    last_random = -1
    trace = []
    while True:
        balanced = abs(st.size_a - n / 2) <= slack
        if obj == 0 and balanced:
            p = Partition(tuple(int(s) for s in st.side))
            return HeuristicResult(p, it, True, 0, kicks, escapes, trace)
        if it >= max_iters:
            # count the balance excess too, so final_objective is 0 only on success
            excess = math.ceil(max(0.0, abs(st.size_a - n / 2) - slack))
            return HeuristicResult(None, it, False, obj + excess, kicks, escapes, trace)
        it += 1
        cand = st.own < st.need()
        new_size = st.size_a + np.where(st.side == A_SIDE, -1, 1)
        cand &= np.abs(new_size - n / 2) <= slack
        if cfg.tabu and last_random >= 0:
            cand[last_random] = False
        if not balanced or not cand.any():
            big = A_SIDE if st.size_a > n / 2 else 1 - A_SIDE
            pool = np.flatnonzero(st.side == big)
            v = int(pool[rng.integers(pool.size)])
            kind = "kick"
            kicks += 1
        else:
            delta = st.deltas()
            masked = np.where(cand, delta, np.iinfo(np.int64).max)
            best = masked.min()
            if cfg.tie_break == "lowest":
                v = int(np.argmin(masked))
            else:
                ties = np.flatnonzero(masked == best)
                v = int(ties[rng.integers(ties.size)])
            kind = "move"
            if best > 0:
                pool = np.flatnonzero(cand)
                v = int(pool[rng.integers(pool.size)])
                kind = "escape"
                escapes += 1
        st.switch(v)
        last_random = v if kind != "move" else -1
        obj = st.objective()
        if cfg.record_trace:
            trace.append((kind, v, obj))
