"""Constructors for the named graph families, plus corona and join products.

Vertex numbering conventions are fixed so tests and the CLI can address
vertices deterministically:

* ``cycle(n)``: vertex i adjacent to (i±1) mod n.
* ``path(n)``: edges {i, i+1}.
* ``complete_bipartite(m, n)``: part X = 0..m-1, part Y = m..m+n-1.
* ``friendship(n)``: center 0; outer pair of triangle i is (2i-1, 2i).
* ``triangular_cactus(n)``: top row 0..n-1, bottom path n..2n; triangle i
  joins top i-1 to bottom n+i-1 and n+i (a chain of n triangles where
  consecutive triangles share one bottom vertex).
* ``corona(g, h)``: g keeps its labels; copy i of h occupies
  g.n + i*h.n .. g.n + (i+1)*h.n - 1 and is fully joined to vertex i of g.
* ``join(g, h)``: g keeps its labels, h is shifted by g.n; all cross edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError(f"complete bipartite graph needs both parts >= 1, got ({m}, {n})")
    return Graph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def bipartite_parts(m: int, n: int) -> tuple[range, range]:
    """The two parts of ``complete_bipartite(m, n)`` under its numbering."""
    return range(0, m), range(m, m + n)


def friendship(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"friendship graph needs n >= 1 triangles, got {n}")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * n + 1, edges)


def triangular_cactus(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"triangular cactus needs n >= 1 triangles, got {n}")
    edges = [(n + j, n + j + 1) for j in range(n)]
    for i in range(1, n + 1):
        edges += [(i - 1, n + i - 1), (i - 1, n + i)]
    return Graph(2 * n + 1, edges)


def corona(g: Graph, h: Graph) -> Graph:
    if g.n < 1 or h.n < 1:
        raise ValueError("corona needs two nonempty graphs")
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges.extend((base + u, base + v) for u, v in h.edges())
        edges.extend((i, base + u) for u in range(h.n))
    return Graph(g.n + g.n * h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    if g.n < 1 or h.n < 1:
        raise ValueError("join needs two nonempty graphs")
    edges = list(g.edges())
    edges.extend((g.n + u, g.n + v) for u, v in h.edges())
    edges.extend((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


# -- family DSL --------------------------------------------------------------
#
# Strings like `cycle:9`, `kmn:2,3`, `knn:4`, `corona(path:3,complete:1)`,
# `join(empty:2,empty:3)`. `knn:n` is shorthand for the balanced kmn:n,n.

_SIMPLE_KINDS = {
    "empty": (empty_graph, 1),
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "knn": (lambda n: complete_bipartite(n, n), 1),
    "kmn": (complete_bipartite, 2),
    "friendship": (friendship, 1),
    "cactus": (triangular_cactus, 1),
}

_PRODUCT_KINDS = {"corona": corona, "join": join}


_MIN_PARAMS = {
    "empty": 1, "complete": 1, "cycle": 3, "path": 1,
    "knn": 1, "kmn": 1, "friendship": 1, "cactus": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family expression: kind plus integer or nested-spec params.

    Parameter ranges are validated without building the graph, so specs with
    large parameters stay usable by the closed-form evaluators (which never
    construct a Graph and have no 64-vertex cap).
    """

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind in _SIMPLE_KINDS:
            _, arity = _SIMPLE_KINDS[self.kind]
            if len(self.params) != arity or not all(isinstance(p, int) for p in self.params):
                raise ValueError(f"family {self.kind!r} expects {arity} integer parameter(s)")
            lo = _MIN_PARAMS[self.kind]
            if any(p < lo for p in self.params):
                raise ValueError(f"family {self.kind!r} needs parameters >= {lo}, got {self.params}")
        elif self.kind in _PRODUCT_KINDS:
            if len(self.params) != 2 or not all(isinstance(p, FamilySpec) for p in self.params):
                raise ValueError(f"family {self.kind!r} expects two nested family specs")
        else:
            raise ValueError(f"unknown family {self.kind!r}")

    def build(self) -> Graph:
        if self.kind in _SIMPLE_KINDS:
            fn, _ = _SIMPLE_KINDS[self.kind]
            return fn(*self.params)
        fn = _PRODUCT_KINDS[self.kind]
        return fn(self.params[0].build(), self.params[1].build())

    @property
    def order(self) -> int:
        if self.kind in ("empty", "complete", "cycle", "path"):
            return self.params[0]
        if self.kind == "knn":
            return 2 * self.params[0]
        if self.kind == "kmn":
            return self.params[0] + self.params[1]
        if self.kind in ("friendship", "cactus"):
            return 2 * self.params[0] + 1
        g, h = self.params
        if self.kind == "corona":
            return g.order + g.order * h.order
        return g.order + h.order

    def __str__(self) -> str:
        if self.kind in _SIMPLE_KINDS:
            return f"{self.kind}:{','.join(str(p) for p in self.params)}"
        return f"{self.kind}({self.params[0]},{self.params[1]})"


def parse_family(text: str) -> FamilySpec:
    spec, rest = _parse_expr(text.strip())
    if rest:
        raise ValueError(f"trailing text {rest!r} in family spec {text!r}")
    return spec


def _parse_expr(text: str) -> tuple[FamilySpec, str]:
    name = ""
    i = 0
    while i < len(text) and (text[i].isalnum() or text[i] == "_"):
        name += text[i]
        i += 1
    if not name:
        raise ValueError(f"expected a family name at {text!r}")
    rest = text[i:]
    if rest.startswith("("):
        if name not in _PRODUCT_KINDS:
            raise ValueError(f"family {name!r} does not take nested specs")
        left, rest = _parse_expr(rest[1:])
        if not rest.startswith(","):
            raise ValueError(f"expected ',' between {name} operands")
        right, rest = _parse_expr(rest[1:])
        if not rest.startswith(")"):
            raise ValueError(f"missing ')' closing {name}(...)")
        return FamilySpec(name, (left, right)), rest[1:]
    if not rest.startswith(":"):
        raise ValueError(f"family {name!r} needs ':' and parameters (e.g. {name}:4)")
    rest = rest[1:]
    params = []
    while True:
        j = 0
        while j < len(rest) and rest[j].isdigit():
            j += 1
        if j == 0:
            raise ValueError(f"expected an integer parameter for {name!r}")
        params.append(int(rest[:j]))
        rest = rest[j:]
        if rest.startswith(","):
            # a comma only continues this parameter list outside products
            nxt = rest[1:]
            if nxt[:1].isdigit():
                rest = nxt
                continue
        break
    return FamilySpec(name, tuple(params)), rest
