"""Peeling machinery for f-internal and f-degenerate vertex sets.

A set K is f-internal when every x in K has at least f(x) neighbors in K,
and f-degenerate when every non-empty subset has a vertex with at most
f(x) neighbors inside it. Peeling away vertices with d_K(x) <= f(x) leaves
the unique maximal (f+1)-internal subset; the set is f-degenerate exactly
when nothing survives.

Thresholds ``f`` may be an int (constant) or a per-vertex sequence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


class NoInternalSubsetError(ValueError):
    pass


@dataclass(frozen=True)
class PeelResult:
    core: frozenset[int]
    order: tuple[tuple[int, int], ...]  # (vertex, degree inside K at removal)


def _threshold(f, n: int) -> Sequence[int]:
    if isinstance(f, int):
        return [f] * n
    if len(f) != n:
        raise ValueError(f"threshold has length {len(f)}, graph has {n} vertices")
    return f


def _shift(f, delta: int):
    if isinstance(f, int):
        return f + delta
    return [v + delta for v in f]


def peel_core(g: Graph, S: Iterable[int], f, priority: Sequence[int] | None = None) -> PeelResult:
    """Remove vertices with d_K(x) <= f(x) until none remain.

    Among removable vertices the one with the smallest ``priority`` (default:
    its id) goes first. The surviving core does not depend on that choice.
    """
    n = g.n
    thr = _threshold(f, n)
    adj = g.adjacency
    inside = [False] * n
    members = []
    for v in S:
        if not inside[v]:
            inside[v] = True
            members.append(v)
    deg = [0] * n
    for v in members:
        deg[v] = sum(1 for u in adj[v] if inside[u])
    key = (lambda v: v) if priority is None else (lambda v: priority[v])
    heap = [(key(v), v) for v in members if deg[v] <= thr[v]]
    heapq.heapify(heap)
    queued = [False] * n
    for _, v in heap:
        queued[v] = True
    order = []
    while heap:
        _, v = heapq.heappop(heap)
        order.append((v, deg[v]))
        inside[v] = False
        for u in adj[v]:
            if inside[u]:
                deg[u] -= 1
                if not queued[u] and deg[u] <= thr[u]:
                    queued[u] = True
                    heapq.heappush(heap, (key(u), u))
    core = frozenset(v for v in members if inside[v])
    return PeelResult(core, tuple(order))


def peel_survivors(g: Graph, S: Iterable[int], f) -> set[int]:
    """Core of ``S`` w.r.t. threshold ``f`` without the removal trace.

    Order-free FIFO peeling; used on hot paths.
    """
    adj = g.adjacency
    thr = f if not isinstance(f, int) else None
    K = set(S)
    deg = {}
    stack = []
    for v in K:
        c = 0
        for u in adj[v]:
            if u in K:
                c += 1
        deg[v] = c
        if c <= (f if thr is None else thr[v]):
            stack.append(v)
    removed = set(stack)
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in K and u not in removed:
                c = deg[u] - 1
                deg[u] = c
                if c <= (f if thr is None else thr[u]):
                    removed.add(u)
                    stack.append(u)
    return K - removed


def is_degenerate(g: Graph, S: Iterable[int], f) -> bool:
    return not peel_survivors(g, S, f)


def is_internal(g: Graph, S: Iterable[int], f) -> bool:
    """True when every x in S has at least f(x) neighbors in S."""
    S = set(S)
    thr = _threshold(f, g.n)
    adj = g.adjacency
    return all(sum(1 for u in adj[x] if u in S) >= thr[x] for x in S)


def maximal_internal_subset(g: Graph, S: Iterable[int], f) -> frozenset[int]:
    """The unique maximal f-internal subset of S (possibly empty)."""
    return frozenset(peel_survivors(g, S, _shift(f, -1)))


def minimal_internal_subset(g: Graph, f) -> frozenset[int]:
    """An inclusion-minimal non-empty f-internal vertex set.

    Starts from the maximal f-internal set and, scanning vertices by id,
    replaces A by the maximal f-internal subset of A minus x whenever that is
    non-empty. A vertex whose removal empties the core keeps doing so for
    every smaller A, so one pass suffices.
    """
    f_minus = _shift(f, -1)
    A = peel_survivors(g, range(g.n), f_minus)
    if not A:
        raise NoInternalSubsetError("graph has no non-empty f-internal subset")
    for x in sorted(A):
        if x not in A:
            continue
        T = peel_survivors(g, A - {x}, f_minus)
        if T:
            A = T
    return frozenset(A)
