"""The seven generalized thorn constructions.

Types I-IV glue each gadget onto ``v_i`` by identification (``v_i`` is a
vertex of the gadget); Types V-VII keep the gadget disjoint and join it to
``v_i`` with a single bridge edge.

New vertices are numbered deterministically: base vertices keep ids
``0..n-1``, then copies are appended in ascending ``v_i``, then copy index,
then a fixed order inside the copy. The attachment vertex of a gadget is
always its lowest fresh id.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterator

from .graph_core import Edge, Graph


class ThornSpecError(ValueError):
    pass


class ThornType(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"

    @property
    def uses_s(self) -> bool:
        return self in (ThornType.IV, ThornType.VII)

    @property
    def min_r(self) -> int:
        return _MIN_R[self]


_MIN_R = {
    ThornType.I: 2,
    ThornType.II: 3,
    ThornType.III: 3,
    ThornType.IV: 1,
    ThornType.V: 3,
    ThornType.VI: 1,
    ThornType.VII: 1,
}


@dataclass(frozen=True)
class ThornSpec:
    """What to attach and how many copies per base vertex.

    ``r`` is the path order, cycle length, clique order, or r-side size
    depending on the type; Type VI uses it as the clique order. ``s`` is only
    meaningful for Types IV and VII and must be ``None`` otherwise.
    """

    type: ThornType
    r: int
    t: tuple[int, ...]
    s: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "type", ThornType(self.type))
        object.__setattr__(self, "t", tuple(self.t))
        if self.r < self.type.min_r:
            raise ThornSpecError(f"type {self.type.value} needs r >= {self.type.min_r}, got {self.r}")
        if self.type.uses_s:
            if self.s is None or self.s < 1:
                raise ThornSpecError(f"type {self.type.value} needs s >= 1, got {self.s}")
        elif self.s is not None:
            raise ThornSpecError(f"type {self.type.value} takes no s parameter")
        if any(x < 0 for x in self.t):
            raise ThornSpecError(f"thorn counts must be non-negative, got {self.t}")

    def check_base(self, g: Graph) -> None:
        if len(self.t) != g.n:
            raise ThornSpecError(f"t has length {len(self.t)} but base has n={g.n}")

    @property
    def is_uniform(self) -> bool:
        return len(set(self.t)) <= 1


@dataclass(frozen=True)
class DecoratedGraph:
    graph: Graph
    base_n: int

    @property
    def base_vertex_ids(self) -> range:
        return range(self.base_n)


def parse_t(text: str, n: int) -> tuple[int, ...]:
    """Thorn-count vector from ``uniform:<k>``, ``random:<max>:<seed>`` or ``a,b,c``."""
    text = text.strip()
    try:
        if text.startswith("uniform:"):
            k = int(text.split(":", 1)[1])
            if k < 0:
                raise ThornSpecError(f"negative thorn count in {text!r}")
            return (k,) * n
        if text.startswith("random:"):
            _, hi, seed = text.split(":")
            rng = random.Random(int(seed))
            return tuple(rng.randint(0, int(hi)) for _ in range(n))
        t = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ThornSpecError(f"cannot parse thorn counts {text!r}") from exc
    if len(t) != n:
        raise ThornSpecError(f"t has length {len(t)} but base has n={n}")
    return t


# -- gadgets ------------------------------------------------------------------
# Each gadget yields its edges given the base vertex ``v`` and the first fresh
# id ``a``; the number of fresh vertices it consumes is fixed per spec.

def _fresh_count(spec: ThornSpec) -> int:
    r, s = spec.r, spec.s or 0
    return {
        ThornType.I: r - 1,
        ThornType.II: r - 1,
        ThornType.III: r - 1,
        ThornType.IV: r - 1 + s,
        ThornType.V: r,
        ThornType.VI: r,
        ThornType.VII: r + s,
    }[spec.type]


def _path_gadget(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    chain = [v, *range(a, a + spec.r - 1)]
    yield from zip(chain, chain[1:])


def _cycle_gadget(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    yield from _path_gadget(v, a, spec)
    yield (a + spec.r - 2, v)


def _clique_gadget(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    yield from combinations([v, *range(a, a + spec.r - 1)], 2)


def _bipartite_gadget(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    # v is one r-side vertex; fresh ids: r-1 further r-side, then s s-side
    r_side = [v, *range(a, a + spec.r - 1)]
    s_side = range(a + spec.r - 1, a + spec.r - 1 + spec.s)
    yield from ((x, y) for x in r_side for y in s_side)


def _bridged_cycle(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    yield (v, a)
    yield from ((a + i, a + (i + 1) % spec.r) for i in range(spec.r))


def _bridged_clique(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    yield (v, a)
    yield from combinations(range(a, a + spec.r), 2)


def _bridged_bipartite(v: int, a: int, spec: ThornSpec) -> Iterator[Edge]:
    # bridge lands on the first r-side vertex
    yield (v, a)
    r_side = range(a, a + spec.r)
    s_side = range(a + spec.r, a + spec.r + spec.s)
    yield from ((x, y) for x in r_side for y in s_side)


_GADGETS: dict[ThornType, Callable[[int, int, ThornSpec], Iterator[Edge]]] = {
    ThornType.I: _path_gadget,
    ThornType.II: _cycle_gadget,
    ThornType.III: _clique_gadget,
    ThornType.IV: _bipartite_gadget,
    ThornType.V: _bridged_cycle,
    ThornType.VI: _bridged_clique,
    ThornType.VII: _bridged_bipartite,
}


def _build(g: Graph, spec: ThornSpec, expected: ThornType | None) -> DecoratedGraph:
    if expected is not None and spec.type is not expected:
        raise ThornSpecError(f"expected a type {expected.value} spec, got {spec.type.value}")
    spec.check_base(g)
    gadget = _GADGETS[spec.type]
    width = _fresh_count(spec)
    edges = set(g.edges)
    nxt = g.n
    for v in range(g.n):
        for _ in range(spec.t[v]):
            edges.update(gadget(v, nxt, spec))
            nxt += width
    return DecoratedGraph(Graph.from_edges(nxt, edges), g.n)


def build_type1(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    """Attach ``t_i`` paths of order r, each starting at ``v_i``."""
    return _build(g, spec, ThornType.I)


def build_type2(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.II)


def build_type3(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.III)


def build_type4(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.IV)


def build_type5(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.V)


def build_type6(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.VI)


def build_type7(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _build(g, spec, ThornType.VII)


_BUILDERS = {
    ThornType.I: build_type1,
    ThornType.II: build_type2,
    ThornType.III: build_type3,
    ThornType.IV: build_type4,
    ThornType.V: build_type5,
    ThornType.VI: build_type6,
    ThornType.VII: build_type7,
}


def build(g: Graph, spec: ThornSpec) -> DecoratedGraph:
    return _BUILDERS[spec.type](g, spec)


def t_thorn(g: Graph, t: int) -> DecoratedGraph:
    """Plain t-thorn graph: ``t`` pendant edges at every vertex."""
    return build_type1(g, ThornSpec(ThornType.I, r=2, t=(t,) * g.n))


# -- expected sizes -----------------------------------------------------------

def expected_size(g: Graph, spec: ThornSpec) -> tuple[int, int]:
    """Vertex and edge counts the construction must produce."""
    r, s = spec.r, spec.s or 0
    total = sum(spec.t)
    added_n, added_m = {
        ThornType.I: (r - 1, r - 1),
        ThornType.II: (r - 1, r),
        ThornType.III: (r - 1, r * (r - 1) // 2),
        ThornType.IV: (r + s - 1, r * s),
        ThornType.V: (r, r + 1),
        ThornType.VI: (r, r * (r - 1) // 2 + 1),
        ThornType.VII: (r + s, r * s + 1),
    }[spec.type]
    return g.n + total * added_n, g.m + total * added_m


def degree_shift(spec: ThornSpec, t_i: int) -> int:
    """How much a base vertex's degree grows when it carries ``t_i`` copies."""
    per_copy = {
        ThornType.I: 1,
        ThornType.II: 2,
        ThornType.III: spec.r - 1,
        ThornType.IV: spec.s or 0,
    }.get(spec.type, 1)
    return per_copy * t_i


def check_postconditions(g: Graph, spec: ThornSpec, out: DecoratedGraph) -> list[str]:
    """Return the violated size and degree postconditions (empty when all hold)."""
    problems = []
    n_exp, m_exp = expected_size(g, spec)
    if out.graph.n != n_exp:
        problems.append(f"n'={out.graph.n}, expected {n_exp}")
    if out.graph.m != m_exp:
        problems.append(f"m'={out.graph.m}, expected {m_exp}")
    before, after = g.degrees(), out.graph.degrees()
    for v in range(g.n):
        want = before[v] + degree_shift(spec, spec.t[v])
        if after[v] != want:
            problems.append(f"deg({v})={after[v]}, expected {want}")
    base_edges = {e for e in out.graph.edges if e[1] < g.n}
    if base_edges != set(g.edges):
        problems.append("edges among base vertices changed")
    return problems

