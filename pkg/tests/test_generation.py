from collections import Counter
from itertools import combinations

import pytest

from internal_partition.generation import (
    GenerationError,
    GenSpec,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    named_graph,
    path,
    petersen,
    random_regular,
    star,
)


@pytest.mark.parametrize("n,d,method", [
    (10, 3, "pairing"), (20, 4, "auto"), (50, 6, "auto"), (30, 20, "auto"), (100, 10, "repair"), (7, 0, "auto"),
])
def test_regular_and_simple(n, d, method):
    g = random_regular(GenSpec(n, d, seed=3, method=method))
    assert g.n == n and g.m == n * d // 2
    assert set(g.degrees()) <= {d}
    assert len(set(g.edges())) == g.m


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec(7, 3, 0)
    with pytest.raises(ValueError):
        GenSpec(5, 5, 0)
    with pytest.raises(ValueError):
        GenSpec(10, 4, 0, method="other")


def test_same_seed_same_graph():
    a = random_regular(GenSpec(40, 4, seed=99))
    b = random_regular(GenSpec(40, 4, seed=99))
    c = random_regular(GenSpec(40, 4, seed=100))
    assert a == b
    assert a != c


def test_exhausted_attempts_raise():
    # a simple 8-regular pairing on 10 vertices almost never appears at once
    with pytest.raises(GenerationError):
        random_regular(GenSpec(10, 8, seed=0, max_attempts=1, method="pairing"))


def test_pairing_edge_frequencies_uniform():
    # by symmetry every pair is an edge with probability d / (n - 1)
    n, d, runs = 8, 3, 2000
    counts = Counter()
    for s in range(runs):
        counts.update(random_regular(GenSpec(n, d, seed=s, method="pairing")).edges())
    p = d / (n - 1)
    sigma = (runs * p * (1 - p)) ** 0.5
    for pair in combinations(range(n), 2):
        assert abs(counts[pair] - runs * p) <= 3 * sigma, pair


def test_pairing_uniform_over_labelled_graphs():
    # 70 labelled cubic graphs on 6 vertices: 10 copies of K3,3 and 60 prisms
    runs = 7000
    counts = Counter(tuple(random_regular(GenSpec(6, 3, seed=s, method="pairing")).edges()) for s in range(runs))
    assert len(counts) == 70
    expected = runs / 70
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 120  # df = 69; upper tail well below 1e-3


def test_named_graphs():
    assert complete(5).m == 10
    assert complete_bipartite(3, 3).m == 9 and set(complete_bipartite(3, 3).degrees()) == {3}
    assert cycle(6).degrees() == [2] * 6
    assert path(4).m == 3
    assert star(4).degree(0) == 4
    assert diamond().m == 5 and not diamond().has_edge(2, 3)
    g = petersen()
    assert set(g.degrees()) == {3}
    # girth 5: no triangles, no 4-cycles
    for u, v in g.edges():
        assert not set(g.neighbors(u)) & set(g.neighbors(v))
    for u in range(10):
        for v in range(u + 1, 10):
            if not g.has_edge(u, v):
                assert len(set(g.neighbors(u)) & set(g.neighbors(v))) == 1
    assert circulant(9, [1, 3]).degrees() == [4] * 9
    assert named_graph("circulant", 9, 1, 3) == circulant(9, [1, 3])
    assert named_graph("petersen") == g
    with pytest.raises(ValueError):
        named_graph("nope")
    with pytest.raises(ValueError):
        named_graph("cycle")
