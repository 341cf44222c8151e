import math
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fairdom.combinatorics import (
    binomial,
    compositions,
    cycle_block_count,
    cycle_block_sets,
    cycle_division_formula,
    cycle_division_total,
    multinomial,
    part_permutations,
    partitions,
)
from fairdom.engine import count_fd
from fairdom.families import cycle


class TestBinomial:
    def test_examples(self):
        assert binomial(5, 2) == 10
        assert binomial(3, -1) == 0
        assert binomial(4, 2) == 6

    def test_out_of_range_is_zero(self):
        assert binomial(3, 4) == 0
        assert binomial(-2, 1) == 0
        assert binomial(-1, -1) == 0

    @given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40))
    def test_symmetry(self, n, r):
        if r <= n:
            assert binomial(n, r) == binomial(n, n - r)

    def test_pascal_recurrence(self):
        for n in range(1, 41):
            for r in range(0, n + 1):
                assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)

    def test_no_overflow_large(self):
        assert binomial(200, 100) == math.comb(200, 100)


class TestMultinomial:
    def test_examples(self):
        assert multinomial(4, [1, 1, 1, 1]) == 24
        assert multinomial(2, [1, 1]) == 2
        assert multinomial(4, [2, 2]) == 6

    def test_inconsistent_header_rejected(self):
        with pytest.raises(ValueError, match="header"):
            multinomial(4, [3, 2])

    def test_negative_part_rejected(self):
        with pytest.raises(ValueError):
            multinomial(2, [3, -1])


class TestPartitions:
    def test_examples(self):
        assert partitions(4, 2) == [(3, 1), (2, 2)]
        assert partitions(4, 4) == [(1, 1, 1, 1)]
        assert partitions(3, 5) == []

    def test_non_negative_mode_allows_zero_parts(self):
        assert (2, 0) in partitions(2, 2, min_part=0)
        assert partitions(0, 3, min_part=0) == [(0, 0, 0)]

    def test_canonical_and_complete(self):
        for k in range(0, 10):
            for m in range(1, 8):
                got = partitions(k, m)
                for p in got:
                    assert len(p) == m and sum(p) == k
                    assert all(p[i] >= p[i + 1] for i in range(m - 1))
                    assert all(t >= 1 for t in p)
                assert len(got) == len(set(got))
                # independent oracle: filter all tuples
                brute = {
                    tuple(sorted(t, reverse=True))
                    for t in product(range(1, k + 1), repeat=m)
                    if sum(t) == k
                } if k >= m >= 1 else set()
                assert set(got) == brute


class TestCompositions:
    def test_count_matches_stars_and_bars(self):
        for k in range(1, 13):
            for m in range(1, 13):
                got = list(compositions(k, m))
                assert len(got) == math.comb(k - 1, m - 1)
                assert len(set(got)) == len(got)
                for c in got:
                    assert len(c) == m and sum(c) == k and all(t >= 1 for t in c)

    def test_partition_permutations_cover_compositions(self):
        for k in range(1, 13):
            for m in range(1, min(k, 12) + 1):
                total = sum(part_permutations(p) for p in partitions(k, m))
                assert total == math.comb(k - 1, m - 1)


def run_gap_structure(n, mask, gap):
    """Independent check: all maximal circular gaps have exactly `gap` zeros."""
    bits = [(mask >> i) & 1 for i in range(n)]
    if all(bits) or not any(bits):
        return False
    # rotate so position 0 starts a run of ones
    start = next(i for i in range(n) if bits[i] and not bits[(i - 1) % n])
    rotated = [bits[(start + i) % n] for i in range(n)]
    gaps = []
    i = 0
    while i < n:
        if rotated[i] == 0:
            j = i
            while j < n and rotated[j] == 0:
                j += 1
            gaps.append(j - i)
            i = j
        else:
            i += 1
    return all(g == gap for g in gaps)


class TestCycleBlockCounting:
    def test_worked_example_c8(self):
        sets = cycle_block_sets(8, 4, 2)
        assert len(sets) == 12
        # composition fingerprint: 8 masks with run multiset {1,3}, 4 with {2,2}
        def runs(mask):
            out = []
            bits = [(mask >> i) & 1 for i in range(8)]
            start = next(i for i in range(8) if bits[i] and not bits[(i - 1) % 8])
            rotated = [bits[(start + i) % 8] for i in range(8)]
            i = 0
            while i < 8:
                if rotated[i]:
                    j = i
                    while j < 8 and rotated[j]:
                        j += 1
                    out.append(j - i)
                    i = j
                else:
                    i += 1
            return tuple(sorted(out))

        assert sum(1 for m in sets if runs(m) == (1, 3)) == 8
        assert sum(1 for m in sets if runs(m) == (2, 2)) == 4
        assert cycle_block_count(8, 4, 1) == 2
        assert sorted(cycle_block_sets(8, 4, 1)) == [0b01010101, 0b10101010]

    def test_alternating_sets_of_c6(self):
        assert cycle_block_count(6, 3, 1) == 2

    def test_against_direct_subset_scan(self):
        for n in range(3, 11):
            for k in range(1, n):
                for gap in (1, 2):
                    brute = sum(
                        1
                        for combo in combinations(range(n), k)
                        if run_gap_structure(n, sum(1 << v for v in combo), gap)
                    )
                    assert cycle_block_count(n, k, gap) == brute, (n, k, gap)

    def test_infeasible_structures_are_zero(self):
        assert cycle_block_count(9, 3, 1) == 0  # needs 6 blocks from 3 vertices
        assert cycle_block_count(9, 4, 2) == 0  # odd slack cannot split into 2-gaps

    def test_invalid_arguments_rejected(self):
        with pytest.raises(ValueError):
            cycle_block_count(8, 0, 1)
        with pytest.raises(ValueError):
            cycle_block_count(8, 8, 1)
        with pytest.raises(ValueError):
            cycle_block_count(8, 4, 3)

    def test_families_partition_the_oracle_counts(self):
        # the module's central property; the acceptance suite extends it to n=14
        for n in range(3, 11):
            g = cycle(n)
            for k in range(1, n):
                total = cycle_block_count(n, k, 1) + cycle_block_count(n, k, 2)
                assert total == count_fd(g, k), (n, k)

    def test_gap_families_are_disjoint(self):
        for n in range(4, 10):
            for k in range(1, n):
                a = set(cycle_block_sets(n, k, 1))
                b = set(cycle_block_sets(n, k, 2))
                assert not (a & b)


class TestDivisionFormula:
    def test_per_family_values_for_c8(self):
        # the published normalization divides before multiplying by n
        assert cycle_division_formula(8, 4, "A") == Fraction(1, 4)
        assert cycle_division_formula(8, 4, "B") == Fraction(3, 2)
        assert cycle_division_total(8, 4) == 14

    def test_total_matches_structural_counts(self):
        for n in range(3, 13):
            for k in range(1, n):
                assert cycle_division_total(n, k) == \
                    cycle_block_count(n, k, 1) + cycle_block_count(n, k, 2), (n, k)

    def test_family_arg_validated(self):
        with pytest.raises(ValueError):
            cycle_division_formula(8, 4, "C")
