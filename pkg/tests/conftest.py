"""Shared test helpers: an independent definition-literal counter and a
small graph corpus. The naive counter deliberately avoids the package's
bitmask kernel (plain sets + itertools) so engine tests are dual-route."""

import random
from itertools import combinations

import pytest

from fairdom.families import (
    complete,
    complete_bipartite,
    corona,
    cycle,
    empty_graph,
    friendship,
    join,
    path,
    triangular_cactus,
)
from fairdom.graph import Graph


def naive_fair_sets(g, size):
    """All fair dominating sets of one cardinality, straight from the
    definition: every outside vertex has the same nonzero number of
    neighbors inside (the full vertex set passes vacuously)."""
    verts = range(g.n)
    nbrs = {v: {u for u in verts if g.has_edge(u, v)} for v in verts}
    found = []
    for combo in combinations(verts, size):
        d = set(combo)
        outside = [v for v in verts if v not in d]
        if not outside:
            found.append(frozenset(d))
            continue
        counts = {len(nbrs[v] & d) for v in outside}
        if len(counts) == 1 and 0 not in counts:
            found.append(frozenset(d))
    return found


def naive_count(g, size):
    return len(naive_fair_sets(g, size))


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def small_corpus(max_n=8, random_graphs=12, seed=20240817):
    """Deterministic mixed corpus of small graphs for exhaustive checks."""
    rng = random.Random(seed)
    graphs = [
        empty_graph(1), empty_graph(3), empty_graph(5),
        complete(2), complete(4), complete(6),
        path(1), path(2), path(4), path(7), path(8),
        cycle(3), cycle(5), cycle(6), cycle(8),
        complete_bipartite(1, 1), complete_bipartite(2, 3), complete_bipartite(3, 3),
        friendship(1), friendship(2), friendship(3),
        triangular_cactus(2), triangular_cactus(3),
        corona(path(2), complete(1)), corona(cycle(3), complete(1)),
        join(complete(1), cycle(4)), join(empty_graph(2), empty_graph(3)),
    ]
    graphs = [g for g in graphs if g.n <= max_n]
    for _ in range(random_graphs):
        n = rng.randint(1, max_n)
        graphs.append(random_graph(n, rng.choice([0.2, 0.4, 0.6]), rng))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
