from __future__ import annotations

import itertools

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    split_symbols,
    standard_transformations,
)

from thornlab import formula_registry as reg
from thornlab.graph_core import Graph, make_cycle, make_path
from thornlab.indices import hm, m1
from thornlab.thorn_builder import ThornType

from conftest import graphs

C3 = make_cycle(3)


# -- general statements written out as direct vertex/edge loops ----------------

def direct_theorem(fid: str, g: Graph, t, r: int, s: int | None) -> int:
    d = g.degrees()
    E = sorted(g.edges)
    V = range(g.n)
    edge_mix = sum((d[i] + d[j]) * (t[i] + t[j]) for i, j in E)
    edge_sq = sum((t[i] + t[j]) ** 2 for i, j in E)
    st_ = sum(t)
    base = hm(g)
    if fid == "T1":
        return (base + 2 * edge_mix + edge_sq + (16 * r - 35) * st_
                + sum(t[i] * d[i] ** 2 + t[i] ** 3 + 4 * t[i] ** 2 + 2 * t[i] ** 2 * d[i] + 4 * t[i] * d[i] for i in V))
    if fid == "T2":
        return (base + 4 * edge_mix + 4 * edge_sq + 2 * sum(t[i] * d[i] ** 2 for i in V)
                + 8 * sum(d[i] * t[i] ** 2 + d[i] * t[i] + t[i] ** 3 + 2 * t[i] ** 2 for i in V)
                + (16 * r - 24) * st_)
    if fid in ("T3", "T3_proof"):
        tail = (2 * r - 1) if fid == "T3" else 2 * (r - 1)
        return (base + 2 * (r - 1) * edge_mix + (r - 1) ** 2 * edge_sq
                + (r - 1) * sum(t[i] * d[i] ** 2 for i in V)
                + 2 * (r - 1) ** 2 * sum(d[i] * t[i] * (t[i] + 1) for i in V)
                + (r - 1) ** 3 * sum(t[i] ** 3 + 2 * t[i] ** 2 + tail * t[i] for i in V))
    if fid == "T4":
        return (base + 2 * s * edge_mix
                + sum(s * t[i] * (d[i] + r + s * s + r * r + s * t[i] + 2 * r * s) for i in V))
    if fid == "T5":
        return (base + 2 * edge_mix + edge_sq + m1(g) + 2 * sum(d[i] * t[i] for i in V)
                + sum(t[i] ** 2 + (16 * r - 24) * t[i] for i in V) + 9 * g.n + 12 * g.m)
    if fid == "T6":
        return (base + 2 * edge_mix + edge_sq + sum(t[i] * d[i] for i in V) + sum(x * x for x in t)
                + (2 * r**4 - 6 * r**3 - 10 * r**2 + 15 * r) * st_)
    if fid == "T7":
        return (base + edge_mix + edge_sq + sum(t[i] * d[i] ** 2 for i in V)
                + 2 * sum(t[i] ** 2 * d[i] for i in V) + sum(x**3 for x in t)
                + 2 * (s + 1) * sum(d[i] * t[i] for i in V) + 2 * sum(x * x for x in t)
                + (s * s + 3 * s + 2 * s * (s + r) * (s + r + 1) + 1) * st_)
    raise AssertionError(fid)


GENERAL = [f.id for f in reg.list_formulas() if f.kind in ("theorem", "proof_variant")]


@st.composite
def theorem_points(draw):
    fid = draw(st.sampled_from(GENERAL))
    ty = reg.get(fid).thorn_type
    g = draw(graphs(max_n=8))
    t = draw(st.lists(st.integers(0, 4), min_size=g.n, max_size=g.n))
    r = draw(st.integers(ty.min_r, 7))
    s = draw(st.integers(1, 5)) if ty.uses_s else None
    return fid, g, tuple(t), r, s


@given(theorem_points())
def test_theorems_match_direct_loops(point):
    fid, g, t, r, s = point
    assert reg.eval_theorem(fid, g, t, r, s) == direct_theorem(fid, g, t, r, s)


@given(theorem_points(), st.integers(0, 5))
def test_uniform_reduction_consistent(point, k):
    fid, g, _, r, s = point
    t = (k,) * g.n
    assert reg.eval_theorem(fid, g, t, r, s) == reg.eval_theorem_uniform(fid, g.n, g.m, hm(g), m1(g), k, r, s)


@given(theorem_points())
def test_zero_thorns_give_base_hm(point):
    fid, g, _, r, s = point
    if fid == "T5":
        return  # its statement carries thorn-free terms
    assert reg.eval_theorem(fid, g, (0,) * g.n, r, s) == hm(g)


# -- corollary / example strings parsed by sympy ------------------------------

_TR = standard_transformations + (convert_xor, split_symbols, implicit_multiplication_application)
SYM = dict(zip("nmtrsHM", sympy.symbols("n m t r s H M")))


def parse_statement(text: str) -> sympy.Expr:
    text = text.replace("HM(G)", "H").replace("M_1(G)", "M")
    return parse_expr(text, local_dict=SYM, transformations=_TR)


UNIFORM = [f for f in reg.list_formulas() if f.kind in ("corollary", "example")]


@pytest.mark.parametrize("meta", UNIFORM, ids=lambda f: f.id)
def test_statement_text_matches_code(meta):
    expr = parse_statement(meta.statement)
    for n, m, t, r, s in itertools.product(range(0, 3), repeat=5):
        env = {SYM["n"]: n, SYM["m"]: m, SYM["t"]: t, SYM["r"]: r, SYM["s"]: s, SYM["H"]: 17, SYM["M"]: 5}
        if meta.kind == "corollary":
            got = meta.fn(n, m, 17, 5, t, r, s)
        else:
            got = meta.fn(n, m, t, r, s)
        assert got == expr.subs(env)


# -- frozen values ---------------------------------------------------------------

def test_sum_bundle():
    b = reg.sum_bundle(C3, (1, 1, 1))
    assert (b.S_et, b.S_et2, b.S_td2, b.S_t, b.S_hm, b.S_m1) == (24, 12, 12, 3, 48, 12)
    b = reg.sum_bundle(make_path(2), (1, 2))
    assert (b.S_et, b.S_et2, b.S_td) == (6, 9, 3)
    z = reg.sum_bundle(make_cycle(5), (0,) * 5)
    assert (z.S_et, z.S_et2, z.S_td2, z.S_t2d, z.S_td, z.S_t, z.S_t2, z.S_t3) == (0,) * 8
    with pytest.raises(reg.FormulaError):
        reg.sum_bundle(C3, (1, 1))


def test_theorem_values():
    assert reg.eval_theorem("T1", C3, (1, 1, 1), 3) == 210
    assert reg.eval_theorem("T1", C3, (1, 1, 1), 2) == 162
    assert reg.eval_theorem("T2", C3, (1, 1, 1), 3) == 456
    assert reg.eval_theorem("T5", C3, (1, 1, 1), 3) == 270


def test_corollary_values():
    assert reg.eval_corollary("C1", 3, 3, 48, 12, 1, 3) == 234
    assert reg.eval_corollary("C2", 3, 3, 48, 12, 1, 3) == 456
    for n, m, h, M in [(3, 3, 48, 12), (5, 4, 50, 18)]:
        assert reg.eval_corollary("C6", n, m, h, M, 0, 4) == h


def test_example_values():
    assert reg.eval_example("E2b", 3, 1, 3) == 456
    assert reg.eval_example("E2a", 5, 0, 3) == 50
    assert reg.eval_example("E2b", 5, 0, 3) == 80


# -- registry metadata -----------------------------------------------------------

def test_registry_shape():
    fs = reg.list_formulas()
    assert len([f for f in fs if f.kind == "theorem"]) == 7
    assert {f.thorn_type for f in fs if f.kind == "theorem"} == set(ThornType)
    assert len([f for f in fs if f.kind == "corollary"]) == 8
    assert len({f.id for f in fs}) == len(fs)
    assert len(reg.registry_hash()) == 12


def test_applicability():
    assert not reg.applicability("C1", None, 3, (1, 2, 1), 3, None)
    assert reg.applicability("C1", None, 3, (2, 2, 2), 3, None)
    assert not reg.applicability("E2a", "cycle", 4, (1,) * 4, 3, None)
    assert reg.applicability("E2a", "path", 4, (1,) * 4, 3, None)
    assert not reg.applicability("E2b", "cycle", 2, (1, 1), 3, None)
    assert not reg.applicability("E4a_rs", "path", 4, (1,) * 4, 2, 3)
    assert reg.applicability("E7b_rst", "cycle", 4, (2,) * 4, 2, 2)
    assert not reg.applicability("E7b_rst", "cycle", 4, (1,) * 4, 2, 2)
    assert not reg.applicability("T1", None, 3, (1, 1, 1), 1, None)
    assert not reg.applicability("T4", None, 3, (1, 1, 1), 1, None)


def test_evaluation_outside_domain_raises():
    with pytest.raises(reg.FormulaError):
        reg.evaluate("E2a", make_cycle(4), (1,) * 4, 3, family="cycle")
    with pytest.raises(reg.FormulaError):
        reg.eval_corollary("C1", 3, 3, 48, 12, 1, 1)
    with pytest.raises(reg.FormulaError):
        reg.eval_example("E3b", 2, 1, 3)
    with pytest.raises(reg.FormulaError):
        reg.get("T9")
    with pytest.raises(reg.FormulaError):
        reg.eval_theorem("C1", C3, (1, 1, 1), 3)


def test_evaluate_routes_by_kind():
    g = make_path(5)
    t = (2,) * 5
    assert reg.evaluate("C2", g, t, 4) == reg.eval_corollary("C2", 5, 4, hm(g), m1(g), 2, 4)
    assert reg.evaluate("E2a", g, t, 4, family="path") == reg.eval_example("E2a", 5, 2, 4)
    assert reg.evaluate("T2", g, t, 4) == reg.eval_theorem("T2", g, t, 4)
