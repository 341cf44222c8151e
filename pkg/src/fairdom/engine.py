"""The brute-force oracle: fairness classification and exact enumeration.

A set D dominates when every vertex outside D has a neighbor inside; it is
fair when those outside-neighbor counts are all equal to some k >= 1. The
full vertex set has no outside vertices and counts as fair for every k
(vacuously) — that convention is what makes the top coefficient of the
polynomial 1 and gives the edgeless graph fair domination number n.

Counting walks fixed-cardinality subsets only (never the whole power set per
size), pruned by a coverage bound; fairness itself is not monotone, so it is
checked only at full cardinality. The subset space splits into disjoint
strata by smallest member, which is what the optional thread workers
parallelize over; results are bit-identical for any worker count.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import CapacityError
from .graph import Graph, VertexSet

if os.environ.get("FAIRDOM_PURE_PYTHON"):
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _kernel  # type: ignore[no-redef]

#: Which enumeration kernel is active: "compiled" or "python".
KERNEL_BACKEND = _kernel.BACKEND

#: Default subset-enumeration cap; C(28,14) is still desk-scale.
DEFAULT_CAP = 28

#: Absolute cap of the bit-mask representation.
HARD_CAP = 64

DEFAULT_WORKERS = 1


class FairnessStatus(Enum):
    NOT_DOMINATING = "NotDominating"
    NOT_FAIR = "NotFair"
    FAIR = "FairWith"
    VACUOUSLY_FAIR = "VacuouslyFair"


@dataclass(frozen=True)
class FairnessResult:
    status: FairnessStatus
    k: int | None = None

    @property
    def is_fair(self) -> bool:
        return self.status in (FairnessStatus.FAIR, FairnessStatus.VACUOUSLY_FAIR)

    def __str__(self) -> str:
        if self.status is FairnessStatus.FAIR:
            return f"FairWith({self.k})"
        return self.status.value


def _coerce_mask(g: Graph, d) -> int:
    if isinstance(d, VertexSet):
        if d.n != g.n:
            raise ValueError(f"vertex set universe {d.n} does not match graph order {g.n}")
        return d.mask
    if isinstance(d, int):
        if d < 0 or d >> g.n:
            raise ValueError(f"mask {d:#x} has bits outside [0, {g.n})")
        return d
    mask = 0
    for v in d:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
        mask |= 1 << v
    return mask


def classify(g: Graph, d) -> FairnessResult:
    """Classify a candidate set: not dominating, dominating-but-unfair,
    fair with constant k, or vacuously fair (d = V).

    ``d`` may be a VertexSet, an iterable of vertices, or a raw bit mask.
    """
    mask = _coerce_mask(g, d)
    full = (1 << g.n) - 1
    outside = full & ~mask
    if outside == 0:
        return FairnessResult(FairnessStatus.VACUOUSLY_FAIR)
    adj = g.adjacency_masks()
    common = None
    dominates = True
    while outside:
        low = outside & -outside
        c = (adj[low.bit_length() - 1] & mask).bit_count()
        if c == 0:
            return FairnessResult(FairnessStatus.NOT_DOMINATING)
        if common is None:
            common = c
        elif c != common:
            dominates = False
        outside ^= low
    if not dominates:
        return FairnessResult(FairnessStatus.NOT_FAIR)
    return FairnessResult(FairnessStatus.FAIR, common)


def _require_within_cap(g: Graph, cap: int | None) -> int:
    effective = DEFAULT_CAP if cap is None else cap
    if effective > HARD_CAP:
        raise CapacityError(f"cap {effective} exceeds the hard bit-mask cap {HARD_CAP}")
    if g.n > effective:
        raise CapacityError(
            f"graph order {g.n} exceeds the enumeration cap {effective}"
            + ("" if cap is not None else f" (default; raise via cap= up to {HARD_CAP})")
        )
    if effective > DEFAULT_CAP and g.n > DEFAULT_CAP:
        warnings.warn(
            f"enumerating a {g.n}-vertex graph above the default cap "
            f"{DEFAULT_CAP}; this walks C({g.n}, k) subsets per size",
            RuntimeWarning,
            stacklevel=3,
        )
    return effective


def _strata(n: int, k: int) -> range:
    return range(0, n - k + 1)


def _map_strata(fn, firsts, workers: int):
    if workers <= 1 or len(firsts) <= 1:
        return [fn(f) for f in firsts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, firsts))


def count_fd(g: Graph, size: int, *, fair_k: int = 0,
             cap: int | None = None, workers: int | None = None) -> int:
    """Number of fair dominating sets of the given cardinality.

    ``fair_k`` > 0 restricts to sets whose common constant is exactly that
    value (the full vertex set qualifies for every constant).
    """
    if size < 0 or size > g.n:
        return 0
    _require_within_cap(g, cap)
    if size == 0:
        return 1 if g.n == 0 else 0
    adj = g.adjacency_masks()
    w = DEFAULT_WORKERS if workers is None else workers
    parts = _map_strata(
        lambda f: _kernel.count_stratum(adj, g.n, size, f, fair_k),
        list(_strata(g.n, size)), w,
    )
    return sum(parts)


def enumerate_fd(g: Graph, size: int, *, fair_k: int = 0,
                 cap: int | None = None, workers: int | None = None) -> list[VertexSet]:
    """All fair dominating sets of the given cardinality, in lexicographic
    order of their sorted vertex tuples. Length equals ``count_fd``."""
    if size < 0 or size > g.n:
        return []
    _require_within_cap(g, cap)
    if size == 0:
        return [VertexSet(0)] if g.n == 0 else []
    adj = g.adjacency_masks()
    w = DEFAULT_WORKERS if workers is None else workers
    parts = _map_strata(
        lambda f: _kernel.enum_stratum(adj, g.n, size, f, fair_k),
        list(_strata(g.n, size)), w,
    )
    return [VertexSet.from_mask(g.n, m) for chunk in parts for m in chunk]


@dataclass(frozen=True)
class FairDomPolynomial:
    """Coefficient map of the fair domination polynomial: size -> count.

    Only nonzero coefficients are stored. There is never a constant term;
    the smallest stored index is the fair domination number, i.e. zero is a
    root of the polynomial with exactly that multiplicity.
    """

    n: int
    coeffs: dict[int, int]

    def __post_init__(self):
        if 0 in self.coeffs and self.n > 0:
            raise ValueError("fair domination polynomial has no constant term")
        for i, c in self.coeffs.items():
            if not 0 <= i <= self.n:
                raise ValueError(f"coefficient index {i} outside 0..{self.n}")
            if c <= 0:
                raise ValueError(f"stored coefficients must be positive, got {c} at {i}")

    def coefficient(self, i: int) -> int:
        return self.coeffs.get(i, 0)

    def min_size(self) -> int:
        """Smallest cardinality with a nonzero count (= fd of the graph)."""
        return min(self.coeffs)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        return " + ".join(f"{c}*x^{i}" for i, c in self.terms())


def fd_polynomial(g: Graph, *, cap: int | None = None,
                  workers: int | None = None) -> FairDomPolynomial:
    """Exact coefficient map over every cardinality from fd(G) to n."""
    _require_within_cap(g, cap)
    coeffs = {}
    for size in range(0, g.n + 1):
        c = count_fd(g, size, cap=cap, workers=workers)
        if c:
            coeffs[size] = c
    return FairDomPolynomial(g.n, coeffs)


def fd_number(g: Graph, *, cap: int | None = None,
              workers: int | None = None) -> int:
    """Minimum cardinality of a fair dominating set; n exactly when the
    graph is edgeless (only V qualifies there, vacuously)."""
    _require_within_cap(g, cap)
    for size in range(0, g.n + 1):
        if count_fd(g, size, cap=cap, workers=workers) > 0:
            return size
    raise AssertionError("unreachable: the full vertex set is always fair")


def fd_k_number(g: Graph, k: int, *, cap: int | None = None,
                workers: int | None = None) -> int:
    """Minimum cardinality of a k-fair dominating set.

    The full vertex set is a kFD-set for every k (the condition is vacuous),
    so the answer is at most n and never undefined.
    """
    if k < 1:
        raise ValueError(f"fairness constant must be >= 1, got {k}")
    _require_within_cap(g, cap)
    for size in range(0, g.n + 1):
        if count_fd(g, size, fair_k=k, cap=cap, workers=workers) > 0:
            return size
    raise AssertionError("unreachable: the full vertex set is always fair")


def gamma(g: Graph, *, cap: int | None = None) -> int:
    """Ordinary domination number, by exhaustive search with the same
    coverage pruning (used for the invariant gamma <= fd <= n)."""
    _require_within_cap(g, cap)
    if g.n == 0:
        return 0
    adj = g.adjacency_masks()
    n = g.n
    full = (1 << n) - 1
    reach = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        reach[v] = reach[v + 1] | adj[v] | (1 << v)

    def exists(size: int) -> bool:
        def rec(dom: int, start: int, remaining: int) -> bool:
            if dom == full:
                return True
            if remaining == 0:
                return False
            undom = full & ~dom
            if undom & ~reach[start]:
                return False
            for v in range(start, n - remaining + 1):
                if rec(dom | adj[v] | (1 << v), v + 1, remaining - 1):
                    return True
            return False

        return rec(0, 0, size)

    for size in range(1, n + 1):
        if exists(size):
            return size
    raise AssertionError("unreachable: V dominates")
