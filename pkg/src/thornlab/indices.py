"""Degree-based topological indices computed straight from their defining sums.

These are the ground truth for the audit, so each function walks the graph
itself and never leans on a closed form. Python integers are unbounded, so
the values are exact at any size.
"""

from __future__ import annotations

from enum import Enum

from .graph_core import Graph


class IndexKind(str, Enum):
    M1 = "M1"
    M2 = "M2"
    HM = "HM"
    F = "F"
    EM1 = "EM1"
    EM2 = "EM2"


def m1(g: Graph) -> int:
    """First Zagreb index, sum of squared vertex degrees."""
    return sum(d * d for d in g.degrees())


def m1_edge_form(g: Graph) -> int:
    """First Zagreb index via its edge form, sum of ``d(u) + d(v)`` over edges."""
    deg = g.degrees()
    return sum(deg[u] + deg[v] for u, v in g.edges)


def m2(g: Graph) -> int:
    """Second Zagreb index, sum of ``d(u) * d(v)`` over edges."""
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges)


def hm(g: Graph) -> int:
    """Hyper Zagreb index, sum of ``(d(u) + d(v))**2`` over edges."""
    deg = g.degrees()
    return sum((deg[u] + deg[v]) ** 2 for u, v in g.edges)


def f_index(g: Graph) -> int:
    """Forgotten index, sum of cubed vertex degrees."""
    return sum(d**3 for d in g.degrees())


def edge_degrees(g: Graph) -> dict[tuple[int, int], int]:
    deg = g.degrees()
    return {(u, v): deg[u] + deg[v] - 2 for u, v in g.edges}


def em1(g: Graph) -> int:
    return sum(x * x for x in edge_degrees(g).values())


def em2(g: Graph) -> int:
    """Sum of ``d(e) * d(f)`` over unordered pairs of adjacent edges.

    In a simple graph two distinct edges share at most one endpoint, so each
    adjacent pair is counted exactly once at its shared vertex.
    """
    ed = edge_degrees(g)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v), x in ed.items():
        incident[u].append(x)
        incident[v].append(x)
    total = 0
    for xs in incident:
        s = sum(xs)
        # sum over i<j of xs[i]*xs[j]
        total += (s * s - sum(x * x for x in xs)) // 2
    return total


_DISPATCH = {
    IndexKind.M1: m1,
    IndexKind.M2: m2,
    IndexKind.HM: hm,
    IndexKind.F: f_index,
    IndexKind.EM1: em1,
    IndexKind.EM2: em2,
}


def compute(g: Graph, kind: IndexKind | str) -> int:
    if not isinstance(kind, IndexKind):
        kind = IndexKind(kind.upper())
    return _DISPATCH[kind](g)
