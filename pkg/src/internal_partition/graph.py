"""Graph and partition representations, potential computations and the verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

A_SIDE = 0
B_SIDE = 1


class GraphFormatError(ValueError):
    """Raised for malformed graph input (self-loops, duplicate edges, bad ids)."""


class DemandMismatchError(ValueError):
    """Raised when an operation needs d(x) = a(x) + b(x) and it does not hold."""

    def __init__(self, vertex: int, degree: int, a: int, b: int):
        super().__init__(
            f"vertex {vertex}: degree {degree} != a + b = {a} + {b}"
        )
        self.vertex = vertex
        self.degree = degree
        self.a = a
        self.b = b


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphFormatError("adjacency length does not match n")
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphFormatError(f"vertex id {u} out of range")
                if u == v:
                    raise GraphFormatError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphFormatError(f"adjacency of {v} not strictly increasing")
                prev = u
            total += len(nbrs)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _contains(self.adjacency[u], v):
                    raise GraphFormatError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, raising on self-loops or duplicate edges."""
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if v in adj[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return _contains(self.adjacency[u], v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _contains(seq: Sequence[int], x: int) -> bool:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(seq) and seq[lo] == x


@dataclass(frozen=True)
class Partition:
    """Total two-sided assignment; ``side[v]`` is ``A_SIDE`` or ``B_SIDE``.

    Either side may be empty; verifiers flag trivial partitions.
    """

    side: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (A_SIDE, B_SIDE) for s in self.side):
            raise ValueError("side labels must be 0 (A) or 1 (B)")

    @classmethod
    def from_set(cls, n: int, A: Iterable[int]) -> "Partition":
        side = [B_SIDE] * n
        for v in A:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            side[v] = A_SIDE
        return cls(tuple(side))

    @property
    def n(self) -> int:
        return len(self.side)

    @property
    def A(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == A_SIDE)

    @property
    def B(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == B_SIDE)

    def moved(self, x: int) -> "Partition":
        side = list(self.side)
        side[x] ^= 1
        return Partition(tuple(side))

    def is_trivial(self) -> bool:
        return len(set(self.side)) < 2


@dataclass(frozen=True)
class DemandFunctions:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("demand vectors differ in length")
        if any(v < 0 for v in self.a) or any(v < 0 for v in self.b):
            raise ValueError("demands must be non-negative")

    @classmethod
    def constant(cls, n: int, a: int, b: int | None = None) -> "DemandFunctions":
        b = a if b is None else b
        return cls((a,) * n, (b,) * n)

    @classmethod
    def half_degree(cls, g: Graph) -> "DemandFunctions":
        """The internal-partition demands a = b = ceil(d(x)/2)."""
        h = tuple((d + 1) // 2 for d in g.degrees())
        return cls(h, h)

    @property
    def n(self) -> int:
        return len(self.a)

    def check_size(self, g: Graph):
        if self.n != g.n:
            raise ValueError(f"demands have length {self.n}, graph has {g.n} vertices")

    def check_tight(self, g: Graph):
        """Raise DemandMismatchError unless d(x) = a(x) + b(x) everywhere."""
        self.check_size(g)
        for x in range(g.n):
            if g.degree(x) != self.a[x] + self.b[x]:
                raise DemandMismatchError(x, g.degree(x), self.a[x], self.b[x])


@dataclass(frozen=True)
class Violation:
    vertex: int  # -1 for the triviality violation
    side: str  # "A", "B" or "trivial"
    required: int
    actual: int


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _check_vertex(g: Graph, x: int):
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range for n={g.n}")


def degree_in_subset(g: Graph, x: int, S) -> int:
    """|N(x) ∩ S| for a vertex set ``S`` (any container supporting ``in``)."""
    _check_vertex(g, x)
    return sum(1 for u in g.adjacency[x] if u in S)


def own_side_degrees(g: Graph, p: Partition) -> list[int]:
    side = p.side
    return [sum(1 for u in nbrs if side[u] == side[v]) for v, nbrs in enumerate(g.adjacency)]


def cut_size(g: Graph, p: Partition) -> int:
    side = p.side
    return sum(1 for u, v in g.edges() if side[u] != side[v])


def verify_internal(g: Graph, p: Partition, dem: DemandFunctions) -> VerificationReport:
    """Check that ``p`` is a non-trivial (a,b)-internal partition of ``g``.

    Every failure is reported; nothing is raised for a bad partition.
    """
    dem.check_size(g)
    if p.n != g.n:
        raise ValueError("partition size does not match graph")
    violations = []
    if p.is_trivial():
        violations.append(Violation(-1, "trivial", 1, 0))
    own = own_side_degrees(g, p)
    for x in range(g.n):
        if p.side[x] == A_SIDE:
            if own[x] < dem.a[x]:
                violations.append(Violation(x, "A", dem.a[x], own[x]))
        elif own[x] < dem.b[x]:
            violations.append(Violation(x, "B", dem.b[x], own[x]))
    return VerificationReport(tuple(violations))


def potential_w(g: Graph, p: Partition, dem: DemandFunctions) -> int:
    """w(A,B) = a(B) + b(A) - e(A,B)."""
    dem.check_size(g)
    total = 0
    for x, s in enumerate(p.side):
        total += dem.b[x] if s == A_SIDE else dem.a[x]
    return total - cut_size(g, p)


def move_delta_w(g: Graph, p: Partition, dem: DemandFunctions, x: int) -> int:
    """Change of ``potential_w`` when ``x`` switches sides.

    The closed form holds only when d(x) = a(x) + b(x); otherwise this raises.
    """
    _check_vertex(g, x)
    dem.check_size(g)
    d = g.degree(x)
    if d != dem.a[x] + dem.b[x]:
        raise DemandMismatchError(x, d, dem.a[x], dem.b[x])
    own = sum(1 for u in g.adjacency[x] if p.side[u] == p.side[x])
    if p.side[x] == B_SIDE:
        return 2 * (dem.b[x] - own)
    return 2 * (dem.a[x] - own)


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    """Sorted-merge intersection of two adjacency lists."""
    a, b = g.adjacency[u], g.adjacency[v]
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


def is_four_sparse(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Return (True, None) if every 4 vertices span at most 4 edges.

    A 4-set with 5 or more edges contains a diamond, i.e. an edge whose
    endpoints share two neighbors, so scanning edges for two common
    neighbors suffices. On failure the witness is such a 4-set.
    """
    for u, v in g.edges():
        cn = common_neighbors(g, u, v)
        if len(cn) >= 2:
            return False, tuple(sorted((u, v, cn[0], cn[1])))
    return True, None


def edges_within(g: Graph, S: Iterable[int]) -> int:
    S = list(S)
    return sum(1 for u, v in combinations(S, 2) if g.has_edge(u, v))


# Edge-list text format: "n m" header, then one "u v" line per edge.

def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphFormatError("empty graph file")
    if len(rows[0]) != 2:
        raise GraphFormatError("header must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise GraphFormatError(f"bad edge line: {' '.join(r)}")
            edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
    if n < 0 or len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path):
    Path(path).write_text(format_edge_list(g))


# Partition file format: "A: ids..." and "B: ids..." lines.

def format_partition(p: Partition) -> str:
    a = " ".join(str(v) for v in sorted(p.A))
    b = " ".join(str(v) for v in sorted(p.B))
    return f"A: {a}\nB: {b}\n".replace(": \n", ":\n")


def parse_partition(text: str, n: int) -> Partition:
    parts: dict[str, list[int]] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        label, _, rest = ln.partition(":")
        label = label.strip()
        if label not in ("A", "B") or label in parts:
            raise ValueError(f"bad partition line: {ln}")
        parts[label] = [int(t) for t in rest.split()]
    A, B = parts.get("A", []), parts.get("B", [])
    if sorted(A + B) != list(range(n)):
        raise ValueError("partition lines must list every vertex exactly once")
    return Partition.from_set(n, A)
