from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from thornlab.graph_core import Graph, make_complete, make_complete_bipartite, make_cycle, make_path, write_edge_list
from thornlab.indices import hm
from thornlab.thorn_builder import (
    ThornSpec,
    ThornSpecError,
    ThornType,
    build,
    build_type1,
    build_type2,
    build_type3,
    build_type4,
    build_type5,
    build_type6,
    build_type7,
    check_postconditions,
    parse_t,
    t_thorn,
)

from conftest import graphs

C3 = make_cycle(3)
K1 = Graph(1)
ONES = (1, 1, 1)


def hm_of(g, ty, r, t, s=None):
    return hm(build(g, ThornSpec(ThornType(ty), r, t, s)).graph)


class TestSpec:
    @pytest.mark.parametrize("ty, r", [("I", 1), ("II", 2), ("III", 2), ("V", 2), ("VI", 0)])
    def test_minimum_r(self, ty, r):
        with pytest.raises(ThornSpecError):
            ThornSpec(ThornType(ty), r, (1,))

    def test_s_rules(self):
        with pytest.raises(ThornSpecError):
            ThornSpec(ThornType.IV, 2, (1,))
        with pytest.raises(ThornSpecError):
            ThornSpec(ThornType.VII, 2, (1,), s=0)
        with pytest.raises(ThornSpecError):
            ThornSpec(ThornType.I, 2, (1,), s=2)

    def test_negative_t(self):
        with pytest.raises(ThornSpecError):
            ThornSpec(ThornType.I, 2, (1, -1))

    def test_length_mismatch(self):
        with pytest.raises(ThornSpecError):
            build(C3, ThornSpec(ThornType.I, 2, (1, 1)))

    def test_wrong_typed_constructor(self):
        with pytest.raises(ThornSpecError):
            build_type2(C3, ThornSpec(ThornType.I, 2, ONES))

    def test_parse_t(self):
        assert parse_t("uniform:2", 3) == (2, 2, 2)
        assert parse_t("1,0,3", 3) == (1, 0, 3)
        v = parse_t("random:3:9", 10)
        assert v == parse_t("random:3:9", 10) and all(0 <= x <= 3 for x in v)
        for bad in ("1,2", "uniform:x", "random:3", "uniform:-1"):
            with pytest.raises(ThornSpecError):
                parse_t(bad, 3)


class TestTypedExamples:
    def test_type1(self):
        assert hm_of(C3, "I", 2, ONES) == 156
        assert build_type1(C3, ThornSpec(ThornType.I, 3, (0, 0, 0))).graph == C3
        out = build_type1(make_path(2), ThornSpec(ThornType.I, 3, (1, 0))).graph
        assert hm(out) == 34
        assert sorted(out.degrees()) == sorted(make_path(4).degrees())

    def test_type2(self):
        assert hm_of(C3, "II", 3, ONES) == 456
        assert build_type2(K1, ThornSpec(ThornType.II, 3, (1,))).graph == make_cycle(3)
        assert hm_of(K1, "II", 3, (1,)) == 48

    def test_type3(self):
        assert hm_of(C3, "III", 3, ONES) == 456
        assert build_type3(K1, ThornSpec(ThornType.III, 4, (1,))).graph == make_complete(4)
        assert hm_of(K1, "III", 4, (1,)) == 216

    def test_type4(self):
        out = build_type4(K1, ThornSpec(ThornType.IV, 2, (1,), s=2)).graph
        assert out == make_complete_bipartite(2, 2)
        assert hm(out) == 64
        assert build_type4(K1, ThornSpec(ThornType.IV, 1, (1,), s=1)).graph == make_path(2)

    def test_type5(self):
        assert hm_of(C3, "V", 3, ONES) == 414
        assert hm_of(K1, "V", 3, (1,)) == 82
        out = build_type5(K1, ThornSpec(ThornType.V, 4, (1,))).graph
        assert out.degrees()[1] == 3

    def test_type6(self):
        assert hm_of(C3, "VI", 2, ONES) == 210
        assert hm_of(K1, "VI", 3, (1,)) == 82
        out = build_type6(K1, ThornSpec(ThornType.VI, 5, (1,))).graph
        assert out.degrees()[1] == 5

    def test_type7(self):
        out = build_type7(K1, ThornSpec(ThornType.VII, 1, (1,), s=1)).graph
        assert hm(out) == 18
        assert sorted(out.degrees()) == [1, 1, 2]
        assert hm_of(C3, "VII", 1, ONES, 1) == 210
        # bridge lands on an r-side vertex, degree s + 1 afterwards
        out = build_type7(K1, ThornSpec(ThornType.VII, 3, (1,), s=2)).graph
        assert out.degrees()[1] == 3

    @pytest.mark.parametrize("ty", list(ThornType))
    def test_zero_thorns_identity(self, ty):
        s = 2 if ty.uses_s else None
        g = make_cycle(5)
        assert build(g, ThornSpec(ty, max(ty.min_r, 3), (0,) * 5, s)).graph == g


class TestDispatch:
    def test_t_thorn(self):
        assert t_thorn(C3, 1) == build_type1(C3, ThornSpec(ThornType.I, 2, ONES))
        assert t_thorn(C3, 0).graph == C3
        out = t_thorn(make_path(4), 2).graph
        assert out.n == 12 and out.m == 11

    def test_dispatch_matches_typed(self):
        typed = {
            ThornType.I: build_type1, ThornType.II: build_type2, ThornType.III: build_type3,
            ThornType.IV: build_type4, ThornType.V: build_type5, ThornType.VI: build_type6,
            ThornType.VII: build_type7,
        }
        rng = random.Random(5)
        for _ in range(100):
            ty = rng.choice(list(ThornType))
            g = make_path(rng.randint(1, 6))
            spec = ThornSpec(ty, rng.randint(ty.min_r, 5), tuple(rng.randint(0, 2) for _ in range(g.n)),
                             rng.randint(1, 3) if ty.uses_s else None)
            assert build(g, spec) == typed[ty](g, spec)

    def test_decorated_keeps_base_ids(self):
        out = build(C3, ThornSpec(ThornType.V, 3, ONES))
        assert list(out.base_vertex_ids) == [0, 1, 2]
        assert {e for e in out.graph.edges if e[1] < 3} == C3.edges


@st.composite
def specs(draw):
    g = draw(graphs(max_n=6))
    ty = draw(st.sampled_from(list(ThornType)))
    r = draw(st.integers(ty.min_r, 6))
    s = draw(st.integers(1, 4)) if ty.uses_s else None
    t = tuple(draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n)))
    return g, ThornSpec(ty, r, t, s)


@settings(max_examples=300)
@given(specs())
def test_postconditions(case):
    g, spec = case
    out = build(g, spec)
    assert check_postconditions(g, spec, out) == []
    assert all(e[1] >= g.n for e in out.graph.edges - g.edges)


@given(specs())
def test_deterministic(case):
    g, spec = case
    assert write_edge_list(build(g, spec).graph) == write_edge_list(build(g, spec).graph)


@given(graphs(max_n=7), st.data())
def test_cross_type_coincidences(g, data):
    t = tuple(data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n)))
    assert build(g, ThornSpec(ThornType.II, 3, t)).graph == build(g, ThornSpec(ThornType.III, 3, t)).graph
    assert build(g, ThornSpec(ThornType.V, 3, t)).graph == build(g, ThornSpec(ThornType.VI, 3, t)).graph
    assert build(g, ThornSpec(ThornType.VI, 2, t)).graph == build(g, ThornSpec(ThornType.VII, 1, t, 1)).graph


def hm_by_degree_bookkeeping(g: Graph, spec: ThornSpec) -> int:
    """HM of the thorn graph from the base degrees alone, one gadget at a time."""
    ty, r, s, t = spec.type, spec.r, spec.s, spec.t
    shift = {"I": 1, "II": 2, "III": r - 1, "IV": s or 0}.get(ty.value, 1)
    big = [d + shift * ti for d, ti in zip(g.degrees(), t)]
    total = sum((big[i] + big[j]) ** 2 for i, j in g.edges)
    for D, ti in zip(big, t):
        if ty is ThornType.I:
            per = (D + 1) ** 2 if r == 2 else (D + 2) ** 2 + 16 * (r - 3) + 9
        elif ty is ThornType.II:
            per = 2 * (D + 2) ** 2 + 16 * (r - 2)
        elif ty is ThornType.III:
            per = (r - 1) * (D + r - 1) ** 2 + (r - 1) * (r - 2) // 2 * (2 * r - 2) ** 2
        elif ty is ThornType.IV:
            per = s * (D + r) ** 2 + (r - 1) * s * (r + s) ** 2
        elif ty is ThornType.V:
            per = (D + 3) ** 2 + 2 * 25 + 16 * (r - 2)
        elif ty is ThornType.VI:
            per = (D + r) ** 2 + (r - 1) * (2 * r - 1) ** 2 + (r - 1) * (r - 2) // 2 * (2 * r - 2) ** 2
        else:
            per = (D + s + 1) ** 2 + s * (s + 1 + r) ** 2 + (r - 1) * s * (r + s) ** 2
        total += ti * per
    return total


@settings(max_examples=400)
@given(specs())
def test_oracle_agrees_with_degree_bookkeeping(case):
    g, spec = case
    assert hm(build(g, spec).graph) == hm_by_degree_bookkeeping(g, spec)
