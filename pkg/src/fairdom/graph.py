"""Immutable simple undirected graphs over dense 0-based vertex indices.

Vertex sets are single machine-word bit masks, which caps graph order at 64;
that is deliberate: the exhaustive enumeration this package is built around is
infeasible long before that, and the closed-form evaluators never build a
Graph at all.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

from .errors import CapacityError

#: Hard capacity of the bitmask representation (one machine word).
WORD_BITS = 64

#: Returned by :meth:`Graph.distance` for vertices in different components.
UNREACHABLE = math.inf


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > WORD_BITS:
        raise CapacityError(
            f"enumeration cap: vertex sets are single {WORD_BITS}-bit words, "
            f"so graphs are limited to {WORD_BITS} vertices (got n={n})"
        )


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range [0, {n})")


class VertexSet:
    """A subset of {0, ..., n-1} backed by a bit mask.

    Instances are immutable and hashable; set algebra is closed over a fixed
    universe size ``n`` (mixing universes raises).
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()):
        _check_order(n)
        mask = 0
        for v in members:
            _check_vertex(v, n)
            mask |= 1 << v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        _check_order(n)
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside [0, {n})")
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)
        return self

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_mask(n, (1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def _coerce(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")
        return other.mask

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.n, self.mask & self._coerce(other))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.n, self.mask | self._coerce(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.n, self.mask & ~self._coerce(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.n, self.mask ^ self._coerce(other))

    def complement(self) -> "VertexSet":
        return VertexSet.from_mask(self.n, ((1 << self.n) - 1) & ~self.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~self._coerce(other) == 0

    def __le__(self, other: "VertexSet") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        inner = ", ".join(str(v) for v in self)
        return f"VertexSet({{{inner}}} of {self.n})"


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    ``edges`` may repeat pairs (duplicates collapse silently); a self-loop is
    a hard error. Adjacency is stored as one bit mask per vertex.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed (simple graphs only)")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        """Open neighborhood of ``v`` as a raw bit mask (fast path)."""
        _check_vertex(v, self.n)
        return self._adj[v]

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> VertexSet:
        """Open neighborhood N(v); never contains ``v`` itself."""
        return VertexSet.from_mask(self.n, self.adjacency_mask(v))

    def degree(self, v: int) -> int:
        return self.adjacency_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        return (self._adj[u] >> v) & 1 == 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    # -- derived queries ---------------------------------------------------

    def distance(self, u: int, v: int):
        """Edge count of a shortest u-v path; ``UNREACHABLE`` across components."""
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        if u == v:
            return 0
        seen = 1 << u
        frontier = deque([(u, 0)])
        while frontier:
            w, d = frontier.popleft()
            nbrs = self._adj[w] & ~seen
            if (nbrs >> v) & 1:
                return d + 1
            seen |= nbrs
            while nbrs:
                low = nbrs & -nbrs
                frontier.append((low.bit_length() - 1, d + 1))
                nbrs ^= low
        return UNREACHABLE

    def induced_subgraph(self, s: VertexSet | Iterable[int]) -> "Graph":
        """Subgraph on ``s``, relabeled 0..|s|-1 in ascending original order."""
        if isinstance(s, VertexSet):
            if s.n != self.n:
                raise ValueError(f"universe mismatch: {self.n} vs {s.n}")
            members = sorted(s)
        else:
            members = sorted(set(s))
            for v in members:
                _check_vertex(v, self.n)
        index = {v: i for i, v in enumerate(members)}
        edges = [
            (index[u], index[v])
            for u in members
            for v in members
            if u < v and self.has_edge(u, v)
        ]
        return Graph(len(members), edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = [0]
        while frontier:
            w = frontier.pop()
            nbrs = self._adj[w] & ~seen
            seen |= nbrs
            while nbrs:
                low = nbrs & -nbrs
                frontier.append(low.bit_length() - 1)
                nbrs ^= low
        return seen == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


# -- edge-list text format -------------------------------------------------
#
# One edge per line, two whitespace-separated vertex labels, 1-based in files.
# A header line `n <count>` is required so isolated vertices are representable.
# Lines starting with `#` are comments.


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ValueError(
                    f"line {lineno}: expected header 'n <count>' before any edge"
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ValueError(f"line {lineno}: vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two vertex labels, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex label in {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"line {lineno}: vertex label out of range 1..{n}")
        edges.append((u - 1, v - 1))
    if n is None:
        raise ValueError("missing header line 'n <count>'")
    return Graph(n, edges)


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
