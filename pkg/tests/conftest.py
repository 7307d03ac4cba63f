from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from thornlab.graph_core import Graph, random_graph


@st.composite
def graphs(draw, max_n: int = 12, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def seeded_graphs(count: int, max_n: int = 12, seed: int = 2024) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng.randint(0, max_n), rng.random(), rng) for _ in range(count)]


# -- acceptance reporting ------------------------------------------------------

import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""
    def record(name: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((name, bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
