"""Polynomial-time (a,b)-internal partitions of 4-sparse graphs with d = a + b.

The search keeps a set A that is a-degenerate but not (a-1)-degenerate and
grows the potential w(A, V minus A) until the complement stops being
(b-1)-degenerate. Both sides then contain internal cores, which are
extended to a full partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .degeneracy import is_degenerate, is_internal, maximal_internal_subset, minimal_internal_subset, peel_survivors
from .graph import DemandFunctions, Graph, Partition, is_four_sparse, potential_w, verify_internal


class NotFourSparseError(ValueError):
    def __init__(self, witness):
        super().__init__(f"graph is not 4-sparse; witness 4-set {witness}")
        self.witness = witness


class DichotomyFailure(RuntimeError):
    """Neither an absorbable vertex nor a shed triangle exists.

    Carries the full state (A, C, D) so the case can be replayed.
    """

    def __init__(self, message: str, A, C, D, trace):
        super().__init__(message)
        self.A = frozenset(A)
        self.C = frozenset(C)
        self.D = frozenset(D)
        self.trace = list(trace)

    def to_dict(self) -> dict:
        return {
            "error": str(self),
            "A": sorted(self.A),
            "C": sorted(self.C),
            "D": sorted(self.D),
            "trace": [s.to_dict() for s in self.trace],
        }


class InvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class Step:
    kind: str  # "absorb", "strip", "shed" or "shed_pair"
    vertices: tuple[int, ...]  # (x,) for single moves, (x, y, z) for shed_pair
    w: int
    size: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "w": self.w, "size": self.size}


@dataclass
class SearchState:
    A: frozenset[int]
    w: int
    trace: list[Step] = field(default_factory=list)


def _w(g: Graph, A, dem: DemandFunctions) -> int:
    return potential_w(g, Partition.from_set(g.n, A), dem)


def low_degree_sets(g: Graph, A, dem: DemandFunctions) -> tuple[frozenset[int], frozenset[int]]:
    """C: vertices of A with d_A = a; D: vertices of B with d_B <= b - 1."""
    A = frozenset(A)
    adj = g.adjacency
    C, D = set(), set()
    for v in range(g.n):
        inside = sum(1 for u in adj[v] if u in A)
        if v in A:
            if inside == dem.a[v]:
                C.add(v)
        elif g.degree(v) - inside <= dem.b[v] - 1:
            D.add(v)
    return frozenset(C), frozenset(D)


def check_preconditions(g: Graph, dem: DemandFunctions, force: bool = False):
    dem.check_tight(g)
    for x in range(g.n):
        if dem.a[x] < 2 or dem.b[x] < 2:
            raise ValueError(f"vertex {x}: demands must be at least 2 (a={dem.a[x]}, b={dem.b[x]})")
    if not force:
        sparse, witness = is_four_sparse(g)
        if not sparse:
            raise NotFourSparseError(witness)


def _a_minus_1(dem):
    return [v - 1 for v in dem.a]


def _b_minus_1(dem):
    return [v - 1 for v in dem.b]


def initialize(g: Graph, dem: DemandFunctions) -> SearchState:
    """Start from an inclusion-minimal a-internal set."""
    A = set(minimal_internal_subset(g, list(dem.a)))
    adj = g.adjacency
    changed = True
    while changed:
        changed = False
        for x in sorted(A):
            if sum(1 for u in adj[x] if u in A) < dem.a[x]:
                A.discard(x)
                changed = True
    A = frozenset(A)
    return SearchState(A, _w(g, A, dem))


def loop_guard(g: Graph, A, dem: DemandFunctions) -> bool:
    """True while the complement of A is (b-1)-degenerate."""
    B = set(range(g.n)) - set(A)
    return is_degenerate(g, B, _b_minus_1(dem))


def check_state(g: Graph, A, dem: DemandFunctions):
    if not A or len(A) > g.n - 2 or len(A) < 2:
        raise InvariantViolation(f"|A|={len(A)} outside [2, n-2]")
    if not is_degenerate(g, A, list(dem.a)):
        raise InvariantViolation("A is not a-degenerate")
    if is_degenerate(g, A, _a_minus_1(dem)):
        raise InvariantViolation("A is (a-1)-degenerate")


def loop_step(g: Graph, state: SearchState, dem: DemandFunctions,
              restore: bool = True) -> tuple[SearchState, Step]:
    """One iteration of the main loop; assumes the loop guard holds.

    Moves, in priority order:

    * absorb: some x in D with A + x still a-degenerate (w grows by >= 2);
    * shed_pair: a triangle x, y, z with x in D, y, z in C, dropping y and z
      (w grows by 2);
    * strip: drop a vertex of A below its demand (w grows by >= 2);
    * shed: drop one y in C when A - y keeps a non-empty a-internal subset
      (w unchanged, |A| shrinks).

    The last two keep A locally maximal for w and locally minimal in size.
    Without them (``restore=False``) the first two moves alone can run out,
    which raises DichotomyFailure; with them some move always exists, and a
    shed pair is only taken when A - {y, z} stays a-internal.
    """
    A = state.A
    C, D = low_degree_sets(g, A, dem)
    if not D:
        raise DichotomyFailure("D is empty while the loop guard holds", A, C, D, state.trace)
    a = list(dem.a)
    adj = g.adjacency

    def advance(kind, verts, new_A):
        step = Step(kind, verts, _w(g, new_A, dem), len(new_A))
        return SearchState(new_A, step.w, state.trace + [step]), step

    for x in sorted(D):
        if not peel_survivors(g, A | {x}, a):
            return advance("absorb", (x,), A | {x})
    for x in sorted(D):
        cand = sorted(u for u in adj[x] if u in C)
        for i, y in enumerate(cand):
            for z in cand[i + 1:]:
                if g.has_edge(y, z):
                    new_A = A - {y, z}
                    if not restore or (new_A and is_internal(g, new_A, a)):
                        return advance("shed_pair", (x, y, z), new_A)
    if restore:
        for y in sorted(A):
            if sum(1 for u in adj[y] if u in A) < a[y]:
                return advance("strip", (y,), A - {y})
        a_minus = _a_minus_1(dem)
        for y in sorted(C):
            if peel_survivors(g, A - {y}, a_minus):
                return advance("shed", (y,), A - {y})
    raise DichotomyFailure("no absorbable vertex in D and no triangle x in D, y, z in C",
                           A, C, D, state.trace)


def extend_internal_pair(g: Graph, A_star, B_star, dem: DemandFunctions) -> Partition:
    """Grow a disjoint (a,b)-internal pair into a full (a,b)-internal partition.

    Unassigned vertices with enough neighbors in A join A; the rest go to B,
    where each then has at least b + 1 own-side neighbors.
    """
    A, B = set(A_star), set(B_star)
    if not A or not B or A & B:
        raise ValueError("need non-empty disjoint sets")
    adj = g.adjacency
    for x in range(g.n):
        if g.degree(x) < dem.a[x] + dem.b[x]:
            raise ValueError(f"vertex {x}: degree below a + b")
    for x in A:
        if sum(1 for u in adj[x] if u in A) < dem.a[x]:
            raise ValueError("A_star is not a-internal")
    for x in B:
        if sum(1 for u in adj[x] if u in B) < dem.b[x]:
            raise ValueError("B_star is not b-internal")
    unassigned = set(range(g.n)) - A - B
    grew = True
    while grew:
        grew = False
        for x in sorted(unassigned):
            if sum(1 for u in adj[x] if u in A) >= dem.a[x]:
                A.add(x)
                unassigned.discard(x)
                grew = True
    B |= unassigned
    p = Partition.from_set(g.n, A)
    report = verify_internal(g, p, dem)
    if not report.ok:
        raise InvariantViolation(f"extended partition fails verification: {report.violations[:3]}")
    return p


@dataclass
class ConstructiveResult:
    partition: Partition
    trace: list[Step]
    initial_w: int
    initial_size: int


def find_internal_partition_4sparse(g: Graph, dem: DemandFunctions, force: bool = False,
                                    check_invariants: bool = True,
                                    restore: bool = True) -> ConstructiveResult:
    """Find an (a,b)-internal partition of a 4-sparse graph with d = a + b, a, b >= 2.

    ``restore=False`` runs only the absorb / shed-pair loop, which can end in
    DichotomyFailure once A stops being minimal. ``force`` skips the
    4-sparsity check.
    """
    check_preconditions(g, dem, force)
    state = initialize(g, dem)
    initial_w, initial_size = state.w, len(state.A)
    if check_invariants:
        check_state(g, state.A, dem)
    while loop_guard(g, state.A, dem):
        prev = (state.w, -len(state.A))
        state, step = loop_step(g, state, dem, restore)
        if check_invariants:
            check_state(g, state.A, dem)
            if (step.w, -step.size) <= prev:
                raise InvariantViolation(f"(w, -|A|) did not increase at {step}")
    A_star = maximal_internal_subset(g, state.A, list(dem.a))
    B_star = maximal_internal_subset(g, set(range(g.n)) - state.A, list(dem.b))
    p = extend_internal_pair(g, A_star, B_star, dem)
    return ConstructiveResult(p, state.trace, initial_w, initial_size)
