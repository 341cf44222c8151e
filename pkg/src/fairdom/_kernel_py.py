"""Pure-Python enumeration kernel; interface twin of the compiled one.

Depth-first scan over fixed-cardinality vertex subsets, restricted to one
stratum (all subsets whose smallest member is ``first``). Partial subsets are
abandoned as soon as the remaining picks cannot dominate the graph; fairness
is only decidable at full cardinality, so it is checked there and nowhere
else.
"""

from __future__ import annotations

BACKEND = "python"


def _is_fair(adj, n: int, full: int, mask: int, fair_k: int) -> bool:
    outside = full & ~mask
    if outside == 0:
        return True  # the whole vertex set, vacuously fair for every constant
    common = -1
    while outside:
        low = outside & -outside
        c = (adj[low.bit_length() - 1] & mask).bit_count()
        if c == 0:
            return False
        if common < 0:
            common = c
        elif c != common:
            return False
        outside ^= low
    return fair_k <= 0 or common == fair_k


def _suffix_tables(adj, n: int):
    """reach[p] = union of closed neighborhoods of vertices >= p;
    maxcov[p] = largest closed-neighborhood size among them."""
    reach = [0] * (n + 1)
    maxcov = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        closed = adj[v] | (1 << v)
        reach[v] = reach[v + 1] | closed
        maxcov[v] = max(maxcov[v + 1], closed.bit_count())
    return reach, maxcov


def _scan(adj, n: int, k: int, first: int, fair_k: int, out):
    """Core DFS; ``out`` is None for counting or a list collecting masks."""
    full = (1 << n) - 1
    reach, maxcov = _suffix_tables(adj, n)
    count = 0

    start_mask = 1 << first
    start_dom = adj[first] | start_mask
    if k == 1:
        if _is_fair(adj, n, full, start_mask, fair_k):
            count += 1
            if out is not None:
                out.append(start_mask)
        return count

    # stack of (mask, dominated, next-candidate); depth = picks made so far
    mask_st = [0] * (k + 1)
    dom_st = [0] * (k + 1)
    cand_st = [0] * (k + 1)
    d = 1
    mask_st[1], dom_st[1], cand_st[1] = start_mask, start_dom, first + 1

    while d >= 1:
        v = cand_st[d]
        if v > n - (k - d):
            d -= 1
            continue
        cand_st[d] = v + 1
        nm = mask_st[d] | (1 << v)
        nd = dom_st[d] | adj[v] | (1 << v)
        r = k - d - 1
        if r == 0:
            if _is_fair(adj, n, full, nm, fair_k):
                count += 1
                if out is not None:
                    out.append(nm)
            continue
        undom = full & ~nd
        if undom & ~reach[v + 1]:
            continue  # some vertex can never be dominated from here
        if undom.bit_count() > r * maxcov[v + 1]:
            continue  # too few picks left to cover what remains
        d += 1
        mask_st[d], dom_st[d], cand_st[d] = nm, nd, v + 1

    return count


def count_stratum(adj, n: int, k: int, first: int, fair_k: int = 0) -> int:
    """Fair dominating k-sets with smallest member ``first``.

    ``fair_k`` = 0 accepts any common fairness constant; a positive value
    requires that exact constant (the full vertex set passes either way).
    """
    return _scan(adj, n, k, first, fair_k, None)


def enum_stratum(adj, n: int, k: int, first: int, fair_k: int = 0) -> list[int]:
    """Masks of the stratum's fair dominating k-sets, in lexicographic
    order of their sorted vertex tuples."""
    out: list[int] = []
    _scan(adj, n, k, first, fair_k, out)
    return out
