"""Exact integer combinatorics behind the closed-form evaluators.

Everything here is pure and exact: Python ints throughout, `fractions.Fraction`
for the one evaluator whose published form divides before it multiplies.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

from .errors import FormulaInconsistencyError


def binomial(n: int, r: int) -> int:
    """C(n, r), extended to 0 whenever r < 0, r > n or n < 0.

    Total on all integer inputs: several published path/cactus formulas rely
    on out-of-range binomials vanishing instead of erroring.
    """
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(m: int, parts: list[int] | tuple[int, ...]) -> int:
    """m! / (t_1! ... t_j!) for non-negative parts summing to m."""
    parts = tuple(parts)
    if any(t < 0 for t in parts):
        raise ValueError(f"multinomial parts must be non-negative, got {parts}")
    if sum(parts) != m:
        raise ValueError(
            f"multinomial header {m} does not match part sum {sum(parts)}: {parts}"
        )
    out = 1
    remaining = m
    for t in parts:
        out *= math.comb(remaining, t)
        remaining -= t
    return out


def compositions(k: int, m: int) -> Iterator[tuple[int, ...]]:
    """All ordered sequences of m positive integers summing to k."""
    if m < 1:
        return
    if m == 1:
        if k >= 1:
            yield (k,)
        return
    for first in range(1, k - m + 2):
        for rest in compositions(k - first, m - 1):
            yield (first,) + rest


def partitions(k: int, m: int, min_part: int = 1) -> list[tuple[int, ...]]:
    """Partitions of k into exactly m parts, each >= min_part, non-increasing.

    Empty list when infeasible. ``min_part=0`` admits zero parts (padded runs
    of zeros at the tail keep the canonical non-increasing order).
    """
    if k < 0 or m < 1 or min_part not in (0, 1):
        raise ValueError(f"bad partition request k={k}, m={m}, min_part={min_part}")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, slots: int, cap: int, acc: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        lo = min_part
        hi = min(cap, remaining - min_part * (slots - 1))
        for part in range(hi, lo - 1, -1):
            acc.append(part)
            rec(remaining - part, slots - 1, part, acc)
            acc.pop()

    rec(k, m, k, [])
    return out


def part_permutations(parts: tuple[int, ...]) -> int:
    """Number of distinct orderings of a multiset of parts."""
    counts: dict[int, int] = {}
    for t in parts:
        counts[t] = counts.get(t, 0) + 1
    return multinomial(len(parts), tuple(counts.values()))


# -- block arrangements on a cycle -------------------------------------------
#
# A k-subset of Z_n whose maximal runs of chosen vertices are separated by
# gaps of exactly `gap` unchosen vertices has b blocks with k + gap*b = n.
# gap=1 gives the 2-fair sets of the n-cycle, gap=2 the 1-fair ones.


def _cycle_block_feasible(n: int, k: int, gap: int) -> int | None:
    """Block count b, or None when no such subset can exist."""
    if gap not in (1, 2):
        raise ValueError(f"gap must be 1 or 2, got {gap}")
    if not (n >= 3 and 0 < k < n):
        raise ValueError(f"need n >= 3 and 0 < k < n, got n={n}, k={k}")
    slack = n - k
    if gap == 1:
        b = slack
    else:
        if slack % 2:
            return None
        b = slack // 2
    if b < 1 or k < b:
        return None
    return b


def cycle_block_sets(n: int, k: int, gap: int) -> list[int]:
    """All such subsets as bit masks, ascending; structural enumeration.

    Generates every composition of k into b positive blocks, lays the blocks
    around the cycle from every start offset, and deduplicates the resulting
    subsets (each subset is produced once per block that can play "first").
    """
    b = _cycle_block_feasible(n, k, gap)
    if b is None:
        return []
    seen: set[int] = set()
    for comp in compositions(k, b):
        for offset in range(n):
            mask = 0
            pos = offset
            for block in comp:
                for i in range(block):
                    mask |= 1 << ((pos + i) % n)
                pos += block + gap
            seen.add(mask)
    return sorted(seen)


def cycle_block_count(n: int, k: int, gap: int) -> int:
    return len(cycle_block_sets(n, k, gap))


# -- the published division formula ------------------------------------------


def cycle_division_formula(n: int, k: int, family: str) -> Fraction:
    """The published per-family sum  sum_P (c/b') * multinomial  as printed.

    ``family`` is "A" (gap 1, prefactor 1/(n-k)) or "B" (gap 2, prefactor
    2/(n-k)). The printed multinomial header contradicts its own summation
    constraint, so this evaluator uses the one consistent reading that
    reproduces the published worked example d_f(C_8,4) = 2+8+4: the
    multinomial counts the distinct orderings of each partition's parts
    (header = number of blocks, denominator = multiplicities of equal parts).

    Returns the exact rational value; the published total multiplies by n
    (see :func:`cycle_division_total`).
    """
    if family not in ("A", "B"):
        raise ValueError(f"family must be 'A' or 'B', got {family!r}")
    gap = 1 if family == "A" else 2
    b = _cycle_block_feasible(n, k, gap)
    if b is None:
        return Fraction(0)
    prefactor = Fraction(1, n - k) if family == "A" else Fraction(2, n - k)
    total = Fraction(0)
    for p in partitions(k, b, min_part=1):
        total += prefactor * part_permutations(p)
    return total


def cycle_division_total(n: int, k: int) -> int:
    """n * (|A| + |B|) per the published case split on parity of n-k.

    Raises :class:`FormulaInconsistencyError` when the exact rational total
    is not an integer (a formula failure, never rounded).
    """
    if not (n >= 3 and 0 < k < n):
        raise ValueError(f"need n >= 3 and 0 < k < n, got n={n}, k={k}")
    slack = n - k
    total = Fraction(0)
    if slack % 2 == 0:
        total += cycle_division_formula(n, k, "B")
        if n <= 2 * k:
            total += cycle_division_formula(n, k, "A")
    else:
        if n > 2 * k:
            total = Fraction(0)
        else:
            total = cycle_division_formula(n, k, "A")
    total *= n
    if total.denominator != 1:
        raise FormulaInconsistencyError(
            f"division formula for (n={n}, k={k}) is not an integer: {total}",
            exact=total,
        )
    return int(total)
