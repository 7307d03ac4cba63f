"""Immutable simple undirected graphs, small generator families, and edge-list I/O.

Vertex ids are dense integers ``0..n-1``. Generators fix which id plays each
structural role (path initial vertex is 0, the r-side of ``K_{r,s}`` is
``[0, r)``) so that everything built on top of them is reproducible.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph data or malformed edge-list input."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add((u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return sum(1 for e in g.edges if v in e)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees indexed by vertex id (not sorted)."""
    return g.degrees()


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


# -- generators -------------------------------------------------------------

def make_path(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def make_complete(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, combinations(range(k), 2))


def make_complete_bipartite(r: int, s: int) -> Graph:
    """``K_{r,s}`` with the r-side on ``[0, r)`` and the s-side on ``[r, r+s)``."""
    if r < 1 or s < 1:
        raise GraphError(f"complete bipartite needs r, s >= 1, got ({r}, {s})")
    return Graph.from_edges(r + s, ((a, r + b) for a in range(r) for b in range(s)))


def make_star(k: int) -> Graph:
    """Star on ``k`` vertices: centre 0 joined to leaves ``1..k-1``."""
    if k < 2:
        raise GraphError(f"star needs at least 2 vertices, got {k}")
    return Graph.from_edges(k, ((0, i) for i in range(1, k)))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p); may be disconnected."""
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_connected_graph(n: int, rng: random.Random, extra_p: float = 0.3) -> Graph:
    """Random labelled spanning tree plus each remaining pair with probability ``extra_p``."""
    if n < 1:
        raise GraphError(f"need at least 1 vertex, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < extra_p:
            edges.add(e)
    return Graph.from_edges(n, edges)


# -- serialization ------------------------------------------------------------

def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated decimal ids. Lines starting
    with ``#`` and blank lines are ignored. An optional first content line
    ``n <count>`` declares the vertex count (needed for isolated vertices);
    otherwise ``n`` is one more than the largest id seen. Duplicate edges
    collapse.
    """
    declared = None
    edges: list[Edge] = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: bad header {raw!r}")
            declared = int(parts[1])
            first = False
            continue
        first = False
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if declared is None:
        n = top
    elif top > declared:
        raise GraphError(f"vertex id {top - 1} exceeds declared n={declared}")
    else:
        n = declared
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    """Canonical edge list. A header is emitted only when it changes ``n``."""
    lines = []
    top = 1 + max((v for _, v in g.edges), default=-1)
    if top != g.n:
        lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines)


def write_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = set(range(g.n)) - {x for e in g.edges for x in e}
    lines.extend(f"  {v};" for v in sorted(isolated))
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines)


# -- base descriptors -----------------------------------------------------------

@dataclass(frozen=True)
class BaseSpec:
    """A base graph together with the family it was drawn from.

    ``label`` is the mini-language string that rebuilds it, e.g. ``path:5``,
    ``bipartite:2:3``, ``random:6:11`` or ``file:g.txt``.
    """

    family: str
    label: str
    graph: Graph


_FAMILIES = {
    "path": (1, make_path),
    "cycle": (1, make_cycle),
    "complete": (1, make_complete),
    "bipartite": (2, make_complete_bipartite),
    "star": (1, make_star),
}


def parse_base(text: str) -> BaseSpec:
    """Parse ``path:n``, ``cycle:n``, ``complete:n``, ``bipartite:r:s``, ``star:n``,
    ``random:n:seed`` or ``file:<path>``."""
    family, _, rest = text.strip().partition(":")
    if family == "file":
        if not rest:
            raise GraphError("file: needs a path")
        try:
            with open(rest) as fh:
                g = read_edge_list(fh.read())
        except OSError as exc:
            raise GraphError(f"cannot read {rest}: {exc}") from exc
        return BaseSpec("file", text.strip(), g)
    args = rest.split(":") if rest else []
    if not all(a.isdigit() for a in args):
        raise GraphError(f"bad base descriptor {text!r}")
    nums = [int(a) for a in args]
    if family == "random":
        if len(nums) != 2:
            raise GraphError(f"random base needs n and seed, got {text!r}")
        g = random_connected_graph(nums[0], random.Random(nums[1]))
    elif family in _FAMILIES:
        arity, make = _FAMILIES[family]
        if len(nums) != arity:
            raise GraphError(f"{family} base takes {arity} parameter(s), got {text!r}")
        g = make(*nums)
    else:
        raise GraphError(f"unknown base family {family!r}")
    label = ":".join([family, *map(str, nums)])
    return BaseSpec(family, label, g)
