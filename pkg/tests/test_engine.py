import subprocess
import sys
from itertools import combinations

import pytest

from conftest import naive_count, naive_fair_sets
from fairdom import _kernel_py
from fairdom.engine import (
    DEFAULT_CAP,
    KERNEL_BACKEND,
    FairDomPolynomial,
    FairnessStatus,
    classify,
    count_fd,
    enumerate_fd,
    fd_k_number,
    fd_number,
    fd_polynomial,
    gamma,
)
from fairdom.errors import CapacityError
from fairdom.families import (
    complete,
    cycle,
    empty_graph,
    friendship,
    path,
)
from fairdom.graph import Graph, VertexSet

try:
    from fairdom import _kernel
except ImportError:
    _kernel = None


class TestClassify:
    def test_known_fair_triple_of_c9(self):
        res = classify(cycle(9), {0, 3, 6})
        assert res.status is FairnessStatus.FAIR and res.k == 1

    def test_no_fair_four_subset_of_c9(self):
        g = cycle(9)
        for combo in combinations(range(9), 4):
            assert not classify(g, combo).is_fair

    def test_full_vertex_set_is_vacuously_fair(self, corpus):
        for g in corpus:
            assert classify(g, g.vertex_set()).status is FairnessStatus.VACUOUSLY_FAIR

    def test_not_dominating_witness(self):
        # vertex 4 of the 6-cycle has no neighbor in {0,1,2}
        assert classify(cycle(6), {0, 1, 2}).status is FairnessStatus.NOT_DOMINATING

    def test_not_fair_witness(self):
        # {1,3} dominates the 5-path but outside counts are 1,2,1
        assert classify(path(5), {1, 3}).status is FairnessStatus.NOT_FAIR

    def test_full_set_of_edgeless_graph_is_vacuous(self):
        assert classify(empty_graph(3), {0, 1, 2}).status is FairnessStatus.VACUOUSLY_FAIR

    def test_accepts_vertexset_and_mask(self):
        g = cycle(6)
        vs = VertexSet(6, [0, 3])
        assert classify(g, vs).k == 1
        assert classify(g, 0b001001).k == 1

    def test_out_of_range_member_rejected(self):
        with pytest.raises(ValueError):
            classify(cycle(5), {7})


class TestCountAgainstNaiveOracle:
    def test_full_corpus_all_sizes(self, corpus):
        for g in corpus:
            for size in range(0, g.n + 1):
                assert count_fd(g, size) == naive_count(g, size), (g, size)

    def test_enumeration_matches_naive_sets(self, corpus):
        for g in corpus:
            for size in range(0, g.n + 1):
                got = {frozenset(s) for s in enumerate_fd(g, size)}
                assert got == set(naive_fair_sets(g, size)), (g, size)


class TestCountExamples:
    @pytest.mark.parametrize("n,k,expected", [
        (9, 3, 3), (8, 4, 14), (9, 4, 0), (6, 4, 15),
    ])
    def test_cycles(self, n, k, expected):
        assert count_fd(cycle(n), k) == expected

    def test_paths(self):
        assert count_fd(path(8), 4) == 6

    def test_edgeless_convention(self):
        assert count_fd(empty_graph(3), 3) == 1
        assert count_fd(empty_graph(3), 2) == 0

    def test_out_of_range_sizes(self):
        g = cycle(5)
        assert count_fd(g, -1) == 0
        assert count_fd(g, 6) == 0
        assert count_fd(g, 0) == 0


class TestEnumerationOrder:
    def test_c9_triples_are_the_rotations(self):
        got = [tuple(s) for s in enumerate_fd(cycle(9), 3)]
        assert got == [(0, 3, 6), (1, 4, 7), (2, 5, 8)]

    def test_c6_pairs(self):
        got = [tuple(s) for s in enumerate_fd(cycle(6), 2)]
        assert got == [(0, 3), (1, 4), (2, 5)]

    def test_triangle_full_set(self):
        assert [tuple(s) for s in enumerate_fd(complete(3), 3)] == [(0, 1, 2)]

    def test_lexicographic_by_vertex_tuple(self, corpus):
        for g in corpus:
            for size in (2, 3):
                got = [tuple(s) for s in enumerate_fd(g, size)]
                assert got == sorted(got)


class TestPolynomial:
    def test_complete_graph_matches_binomials(self):
        assert fd_polynomial(complete(4)).coeffs == {1: 4, 2: 6, 3: 4, 4: 1}

    def test_c9_coefficients_including_the_hole_at_four(self):
        poly = fd_polynomial(cycle(9))
        assert poly.coeffs == {3: 3, 5: 27, 6: 30, 7: 36, 8: 9, 9: 1}
        assert poly.coefficient(4) == 0
        assert poly.coefficient(6) == 30  # published prose wrongly claims this is absent

    def test_edgeless_pair(self):
        assert fd_polynomial(empty_graph(2)).coeffs == {2: 1}

    def test_no_constant_term_enforced(self):
        with pytest.raises(ValueError):
            FairDomPolynomial(3, {0: 1, 3: 1})

    def test_invariants_on_corpus(self, corpus):
        for g in corpus:
            if g.n == 0:
                continue
            poly = fd_polynomial(g)
            assert poly.coefficient(0) == 0
            assert poly.min_size() == fd_number(g)
            assert gamma(g) <= fd_number(g) <= g.n
            assert (fd_number(g) == g.n) == (g.edge_count == 0)
            if g.is_connected():
                assert poly.coefficient(g.n) == 1
                if g.n >= 2:
                    assert poly.coefficient(g.n - 1) == g.n


class TestNonMonotonicity:
    def test_c9_witness(self):
        assert count_fd(cycle(9), 3) == 3
        assert count_fd(cycle(9), 4) == 0


class TestFdNumbers:
    def test_examples(self):
        assert fd_number(cycle(7)) == 3
        assert fd_number(cycle(5)) == 3
        assert fd_number(empty_graph(4)) == 4

    def test_fd_k_examples(self):
        assert fd_k_number(cycle(6), 1) == 2
        assert fd_k_number(cycle(6), 2) == 3
        assert fd_k_number(complete(5), 1) == 1

    def test_fd_k_counts_the_full_set_for_every_constant(self):
        # no 5-fair set smaller than V exists in C_6, so fd_5 falls back to n
        assert fd_k_number(cycle(6), 5) == 6

    def test_fd_k_requires_positive_constant(self):
        with pytest.raises(ValueError):
            fd_k_number(cycle(6), 0)

    def test_fd_is_min_over_k_of_fd_k_for_edged_graphs(self, corpus):
        for g in corpus:
            if g.edge_count == 0 or g.n > 8:
                continue
            maxdeg = max(g.degree(v) for v in range(g.n))
            best = min(fd_k_number(g, k) for k in range(1, maxdeg + 1))
            assert best == fd_number(g)

    def test_gamma_examples(self):
        assert gamma(cycle(9)) == 3
        assert gamma(complete(5)) == 1
        assert gamma(path(4)) == 2

    def test_gamma_never_exceeds_fd(self, corpus):
        for g in corpus:
            if g.n >= 1:
                assert gamma(g) <= fd_number(g)


class TestSimplePathLowerBound:
    """A fair dominating set must hit at least k vertices of any induced
    path with 3k-1 edges; asserted on enumerated cycle/path outputs."""

    def test_on_paths(self):
        for n in (7, 8, 10):
            g = path(n)
            for kk in range(1, (n + 1) // 3 + 1):
                window = set(range(3 * kk))  # 3k vertices = path of length 3k-1
                if len(window) > n:
                    continue
                for size in range(1, n + 1):
                    for d in enumerate_fd(g, size):
                        assert len(window & set(d)) >= kk

    def test_on_cycles(self):
        for n in (8, 9, 10):
            g = cycle(n)
            for kk in range(1, n // 3 + 1):
                if 3 * kk > n - 1:
                    continue  # the arc must stay induced
                window = set(range(3 * kk))
                for size in range(1, n + 1):
                    for d in enumerate_fd(g, size):
                        assert len(window & set(d)) >= kk


class TestWorkersAndDeterminism:
    def test_counts_identical_across_worker_counts(self):
        g = cycle(14)
        baseline = count_fd(g, 5, workers=1)
        for w in (2, 8):
            assert count_fd(g, 5, workers=w) == baseline

    def test_enumeration_order_identical_across_worker_counts(self):
        g = cycle(12)
        baseline = enumerate_fd(g, 4, workers=1)
        for w in (2, 8):
            assert enumerate_fd(g, 4, workers=w) == baseline


class TestCapacity:
    def test_default_cap_blocks_large_graphs(self):
        g = empty_graph(DEFAULT_CAP + 1)
        with pytest.raises(CapacityError, match="cap"):
            count_fd(g, g.n)

    def test_cap_override_works_and_warns(self):
        g = empty_graph(DEFAULT_CAP + 1)
        with pytest.warns(RuntimeWarning, match="default cap"):
            assert count_fd(g, g.n, cap=32) == 1

    def test_cap_above_hard_limit_rejected(self):
        with pytest.raises(CapacityError):
            count_fd(empty_graph(4), 2, cap=80)


class TestKernelParity:
    @pytest.mark.skipif(_kernel is None, reason="compiled kernel unavailable")
    def test_backends_agree_on_corpus(self, corpus):
        for g in corpus:
            adj = g.adjacency_masks()
            for size in range(1, g.n + 1):
                for first in range(0, g.n - size + 1):
                    assert _kernel.count_stratum(adj, g.n, size, first, 0) == \
                        _kernel_py.count_stratum(adj, g.n, size, first, 0)
                    assert _kernel.enum_stratum(adj, g.n, size, first, 0) == \
                        _kernel_py.enum_stratum(adj, g.n, size, first, 0)

    @pytest.mark.skipif(_kernel is None, reason="compiled kernel unavailable")
    def test_backends_agree_with_fixed_constant(self):
        g = friendship(3)
        adj = g.adjacency_masks()
        for size in range(1, g.n + 1):
            for fair_k in (1, 2, 3):
                a = sum(_kernel.count_stratum(adj, g.n, size, f, fair_k)
                        for f in range(0, g.n - size + 1))
                b = sum(_kernel_py.count_stratum(adj, g.n, size, f, fair_k)
                        for f in range(0, g.n - size + 1))
                assert a == b

    def test_pure_python_fallback_selectable(self):
        import os

        env = dict(os.environ, FAIRDOM_PURE_PYTHON="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from fairdom.engine import KERNEL_BACKEND, count_fd;"
             "from fairdom.families import cycle;"
             "print(KERNEL_BACKEND, count_fd(cycle(8), 4))"],
            capture_output=True, text=True, env=env,
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.split() == ["python", "14"]

    def test_active_backend_reported(self):
        assert KERNEL_BACKEND in ("compiled", "python")


class TestFixedConstantCounts:
    def test_fixed_k_partitions_the_fair_sets(self, corpus):
        # summing over the realized constants (plus V once) recovers the total
        for g in corpus:
            if g.n < 1 or g.n > 8:
                continue
            maxdeg = max((g.degree(v) for v in range(g.n)), default=0)
            for size in range(1, g.n):
                by_k = sum(count_fd(g, size, fair_k=k) for k in range(1, maxdeg + 1))
                assert by_k == count_fd(g, size)
