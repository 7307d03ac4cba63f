"""Printed closed forms for the hyper Zagreb index of the thorn constructions.

Every entry is transcribed literally, including terms that disagree with a
direct count; deciding which ones hold is the audit's job, not this module's.
All arithmetic is integer.

Identifiers:

* ``T1``..``T7``   general thorn counts ``t_i``, one per construction type
* ``T3_proof``     ``T3`` with the tail coefficient ``2(r-1)`` in place of ``(2r-1)``
* ``C1``..``C7``   uniform ``t_i = t``; ``C4R`` is the ``r = s`` case of ``C4``
* ``E<k>a``/``E<k>b``  uniform ``t`` on a path / cycle base; ``_rs`` and
  ``_rst`` suffixes mark the ``r = s`` and ``r = s = t`` specialisations
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .graph_core import Graph
from .indices import hm, m1
from .thorn_builder import ThornType


class FormulaError(ValueError):
    """Unknown formula id or a point outside a formula's stated domain."""


@dataclass(frozen=True)
class SumBundle:
    """The base-graph sums every general statement is assembled from.

    ``S_et``/``S_et2`` run over edges ``v_i v_j``; the rest over vertices.
    """

    n: int
    m: int
    S_hm: int
    S_m1: int
    S_et: int
    S_et2: int
    S_td2: int
    S_t2d: int
    S_td: int
    S_t: int
    S_t2: int
    S_t3: int

    @classmethod
    def uniform(cls, n: int, m: int, hm_g: int, m1_g: int, t: int) -> "SumBundle":
        """Bundle for ``t_i = t`` built from ``n, m, HM(G), M1(G)`` alone."""
        return cls(
            n=n, m=m, S_hm=hm_g, S_m1=m1_g,
            S_et=2 * t * m1_g, S_et2=4 * m * t * t,
            S_td2=t * m1_g, S_t2d=t * t * 2 * m, S_td=t * 2 * m,
            S_t=n * t, S_t2=n * t * t, S_t3=n * t**3,
        )


def sum_bundle(g: Graph, t: Sequence[int]) -> SumBundle:
    if len(t) != g.n:
        raise FormulaError(f"t has length {len(t)} but base has n={g.n}")
    if any(x < 0 for x in t):
        raise FormulaError("thorn counts must be non-negative")
    d = g.degrees()
    return SumBundle(
        n=g.n,
        m=g.m,
        S_hm=hm(g),
        S_m1=m1(g),
        S_et=sum((d[i] + d[j]) * (t[i] + t[j]) for i, j in g.edges),
        S_et2=sum((t[i] + t[j]) ** 2 for i, j in g.edges),
        S_td2=sum(ti * di * di for ti, di in zip(t, d)),
        S_t2d=sum(ti * ti * di for ti, di in zip(t, d)),
        S_td=sum(ti * di for ti, di in zip(t, d)),
        S_t=sum(t),
        S_t2=sum(ti * ti for ti in t),
        S_t3=sum(ti**3 for ti in t),
    )


# -- general statements ---------------------------------------------------------

def _t1(b: SumBundle, r: int, s: int | None) -> int:
    return (b.S_hm + 2 * b.S_et + b.S_et2 + (16 * r - 35) * b.S_t
            + b.S_td2 + b.S_t3 + 4 * b.S_t2 + 2 * b.S_t2d + 4 * b.S_td)


def _t2(b: SumBundle, r: int, s: int | None) -> int:
    return (b.S_hm + 4 * b.S_et + 4 * b.S_et2 + 2 * b.S_td2
            + 8 * (b.S_t2d + b.S_td + b.S_t3 + 2 * b.S_t2) + (16 * r - 24) * b.S_t)


def _t3_head(b: SumBundle, r: int) -> int:
    q = r - 1
    return (b.S_hm + 2 * q * b.S_et + q * q * b.S_et2 + q * b.S_td2
            + 2 * q * q * (b.S_t2d + b.S_td))


def _t3(b: SumBundle, r: int, s: int | None) -> int:
    return _t3_head(b, r) + (r - 1) ** 3 * (b.S_t3 + 2 * b.S_t2 + (2 * r - 1) * b.S_t)


def _t3_proof(b: SumBundle, r: int, s: int | None) -> int:
    return _t3_head(b, r) + (r - 1) ** 3 * (b.S_t3 + 2 * b.S_t2 + 2 * (r - 1) * b.S_t)


def _t4(b: SumBundle, r: int, s: int) -> int:
    # bracket taken literally, unsquared: s t_i [d_i + r + s^2 + r^2 + s t_i + 2rs]
    return (b.S_hm + 2 * s * b.S_et + s * b.S_td
            + s * (r + s * s + r * r + 2 * r * s) * b.S_t + s * s * b.S_t2)


def _t5(b: SumBundle, r: int, s: int | None) -> int:
    return (b.S_hm + 2 * b.S_et + b.S_et2 + b.S_m1 + 2 * b.S_td
            + b.S_t2 + (16 * r - 24) * b.S_t + 9 * b.n + 12 * b.m)


def _sextic(r: int) -> int:
    return 2 * r**4 - 6 * r**3 - 10 * r**2 + 15 * r


def _t6(b: SumBundle, r: int, s: int | None) -> int:
    return b.S_hm + 2 * b.S_et + b.S_et2 + b.S_td + b.S_t2 + _sextic(r) * b.S_t


def _t7(b: SumBundle, r: int, s: int) -> int:
    return (b.S_hm + b.S_et + b.S_et2 + b.S_td2 + 2 * b.S_t2d + b.S_t3
            + 2 * (s + 1) * b.S_td + 2 * b.S_t2
            + (s * s + 3 * s + 2 * s * (s + r) * (s + r + 1) + 1) * b.S_t)


# -- uniform-t corollaries ------------------------------------------------------------
# arguments: n, m, HM(G), M1(G), t, r, s

def _c1(n, m, h, M, t, r, s):
    return h + 5 * t * M + 8 * m * t**2 + n * t**3 + 4 * n * t**2 + 16 * m * t + 16 * r * n * t - 35 * n * t


def _c2(n, m, h, M, t, r, s):
    return h + 10 * t * M + 32 * m * t**2 + 16 * m * t + 8 * n * t**3 + 16 * n * t**2 + (16 * r - 24) * n * t


def _c3(n, m, h, M, t, r, s):
    return (h + 5 * t * (r - 1) * M + 4 * m * t * (t + 1) * (r - 1) ** 2
            + n * (r - 1) ** 3 * (t**3 + 2 * t**2 + 2 * (r - 1) * t))


def _c4(n, m, h, M, t, r, s):
    return (h + 4 * t * s * M + 2 * m * s * t + s * t * (r + s**2 + r**2) * n
            + s**2 * t**2 * n + 2 * r * s**2 * t * n)


def _c4r(n, m, h, M, t, r, s):
    return h + 4 * t * s * M + 2 * m * s * t + n * s**2 * t + n * s**2 * t**2 + 2 * t * n * s**3


def _c5(n, m, h, M, t, r, s):
    return h + (4 * t + 1) * M + 4 * m * t * (t + 1) + n * t**2 + n * t * (16 * r - 24) + 12 * m + 9 * n


def _c6(n, m, h, M, t, r, s):
    return h + 4 * t * M + 4 * m * t**2 + 2 * m * t + n * t**2 + _sextic(r) * n * t


def _c7(n, m, h, M, t, r, s):
    return (h + 3 * t * M + 8 * m * t**2 + n * t**3 + 4 * m * t * (s + 1) + 2 * n * t**2 * (s + 1)
            + (s**2 + 3 * s + 1) * n * t + 2 * s * (s + r) * (s + r + 1) * n * t)


# -- path / cycle examples ------------------------------------------------------------
# arguments: n, m, t, r, s  (m is n-1 for paths, n for cycles)

def _e1a(n, m, t, r, s):
    return 16 * n + (8 * m + 4 * n) * t**2 + 16 * t * (m + r * n) - 15 * n * t - 30 * t - 30


def _e1b(n, m, t, r, s):
    return 16 * n - 15 * n * t + 8 * m * t**2 + n * t**3 + 4 * n * t**2 + 16 * m * t + 16 * r * n * t


def _e2a(n, m, t, r, s):
    return (16 * n - 30 + 16 * n * t - 60 * t + 32 * m * t**2 + 16 * m * t
            + 8 * n * t**3 + 16 * n * t**2 + 16 * r * n * t)


def _e2b(n, m, t, r, s):
    return 16 * n + 32 * m * t**2 + 16 * m * t + 8 * n * t**3 + 16 * n * t**2 + 16 * r * n * t + 16 * n * t


def _e3a(n, m, t, r, s):
    return (16 * n - 30 + 20 * n * r * t - 20 * n * t - 30 * r * t + 30 * t
            + 4 * m * t * (t + 1) * (r - 1) ** 2
            + n * (r - 1) ** 3 * (t**3 + 2 * t**2 + 2 * r * t - 2 * t))


def _e3b(n, m, t, r, s):
    return (16 * n + 20 * n * r * t - 20 * n * t + 4 * m * t * (t + 1) * (r - 1) ** 2
            + n * (r - 1) ** 3 * (t**3 + 2 * t**2 + 2 * (r - 1) * t))


def _e4a_rs(n, m, t, r, s):
    return (16 * n - 30 + 16 * n * s * t - 24 * s * t + 2 * m * s * t
            + n * s**2 * t + n * s**2 * t**2 + 2 * t * n * s**3)


def _e4b_rs(n, m, t, r, s):
    return 16 * n + 16 * n * s * t + 2 * m * s * t + n * s**2 * t + n * s**2 * t**2 + 2 * t * n * s**3


def _e5a(n, m, t, r, s):
    return (38 * n - 8 * n * t - 8 * t + 4 * m * t**2 + 4 * m * t + 16 * r * n * t
            + 12 * m + n * t**2 - 32)


def _e5b(n, m, t, r, s):
    return 29 * n - 8 * n * t + 4 * m * t + 16 * r * n * t + 16 * m + n * t**2


def _e6a(n, m, t, r, s):
    return (16 * n - 30 + 16 * n * t - 8 * t + 4 * m * t**2 + 2 * m * t + n * t**2
            + _sextic(r) * n * t)


def _e6b(n, m, t, r, s):
    return 16 * n + 16 * n * t + 4 * m * t**2 + 2 * m * t + n * t**2 + _sextic(r) * n * t


def _e7a(n, m, t, r, s):
    return (16 * n - 30 + 13 * n * t - 6 * t + 8 * m * t**2 + n * t**3 + 4 * m * t * s + 4 * m * t
            + 2 * n * s * t**2 + 2 * n * t**2 + 9 * n * t * s**2 + 7 * n * s * t)


def _e7a_rst(n, m, t, r, s):
    return (16 * n - 30 + 31 * n * r + 12 * n * r**3 + 12 * m * r**2 + 9 * n * r**2
            + 4 * m * r - 6 * r)


def _e7b(n, m, t, r, s):
    return (16 * n + 13 * n * t + 8 * m * t**2 + 4 * m * t + 4 * m * t * s + 9 * n * s**2 * t
            + 2 * n * s * t**2 + 2 * n * t**2 + 7 * s * n * t + n * t**3)


def _e7b_rst(n, m, t, r, s):
    return 16 * n + 13 * n * r + 12 * m * r**2 + 4 * m * r + 12 * n * r**3 + 9 * n * r**2


# -- registry -----------------------------------------------------------------------------

@dataclass(frozen=True)
class FormulaMeta:
    id: str
    kind: str  # "theorem", "proof_variant", "corollary", "example"
    thorn_type: ThornType
    statement: str
    family: str | None = None  # "path" / "cycle" for examples
    relation: str | None = None  # None, "r=s" or "r=s=t"
    fn: Callable = None  # type: ignore[assignment]

    @property
    def needs_uniform(self) -> bool:
        return self.kind in ("corollary", "example")

    def describe(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "type": self.thorn_type.value,
            "family": self.family,
            "relation": self.relation,
            "statement": self.statement,
        }


T = ThornType
_ENTRIES = [
    FormulaMeta("T1", "theorem", T.I, r"HM(G)+2\sum_E[d_i+d_j](t_i+t_j)+\sum_E(t_i+t_j)^2+(16r-35)\sum t_i+\sum[t_id_i^2+t_i^3+4t_i^2+2t_i^2d_i+4t_id_i]", fn=_t1),
    FormulaMeta("T2", "theorem", T.II, r"HM(G)+4\sum_E[d_i+d_j](t_i+t_j)+4\sum_E(t_i+t_j)^2+2\sum t_id_i^2+8\sum[d_it_i^2+d_it_i+t_i^3+2t_i^2]+(16r-24)\sum t_i", fn=_t2),
    FormulaMeta("T3", "theorem", T.III, r"HM(G)+2(r-1)\sum_E[d_i+d_j](t_i+t_j)+(r-1)^2\sum_E(t_i+t_j)^2+(r-1)\sum t_id_i^2+2(r-1)^2\sum d_it_i(t_i+1)+(r-1)^3\sum[t_i^3+2t_i^2+(2r-1)t_i]", fn=_t3),
    FormulaMeta("T3_proof", "proof_variant", T.III, r"HM(G)+2(r-1)\sum_E[d_i+d_j](t_i+t_j)+(r-1)^2\sum_E(t_i+t_j)^2+(r-1)\sum t_id_i^2+2(r-1)^2\sum d_it_i(t_i+1)+(r-1)^3\sum[t_i^3+2t_i^2+2(r-1)t_i]", fn=_t3_proof),
    FormulaMeta("T4", "theorem", T.IV, r"HM(G)+2s\sum_E[d_i+d_j](t_i+t_j)+\sum st_i[d_i+r+s^2+r^2+st_i+2rs]", fn=_t4),
    FormulaMeta("T5", "theorem", T.V, r"HM(G)+2\sum_E[d_i+d_j](t_i+t_j)+\sum_E(t_i+t_j)^2+M_1(G)+2\sum d_it_i+\sum[t_i^2+(16r-24)t_i]+9n+12m", fn=_t5),
    FormulaMeta("T6", "theorem", T.VI, r"HM(G)+2\sum_E[d_i+d_j](t_i+t_j)+\sum_E(t_i+t_j)^2+\sum t_id_i+\sum t_i^2+(2r^4-6r^3-10r^2+15r)\sum t_i", fn=_t6),
    FormulaMeta("T7", "theorem", T.VII, r"HM(G)+\sum_E[d_i+d_j](t_i+t_j)+\sum_E(t_i+t_j)^2+\sum t_id_i^2+2\sum t_i^2d_i+\sum t_i^3+2(s+1)\sum d_it_i+2\sum t_i^2+(s^2+3s+2s(s+r)(s+r+1)+1)\sum t_i", fn=_t7),
    FormulaMeta("C1", "corollary", T.I, r"HM(G)+5tM_1(G)+8mt^2+nt^3+4nt^2+16mt+16rnt-35nt", fn=_c1),
    FormulaMeta("C2", "corollary", T.II, r"HM(G)+10tM_1(G)+32mt^2+16mt+8nt^3+16nt^2+(16r-24)nt", fn=_c2),
    FormulaMeta("C3", "corollary", T.III, r"HM(G)+5t(r-1)M_1(G)+4mt(t+1)(r-1)^2+n(r-1)^3(t^3+2t^2+2(r-1)t)", fn=_c3),
    FormulaMeta("C4", "corollary", T.IV, r"HM(G)+4tsM_1(G)+2mst+st(r+s^2+r^2)n+s^2t^2n+2rs^2tn", fn=_c4),
    FormulaMeta("C4R", "corollary", T.IV, r"HM(G)+4tsM_1(G)+2mst+ns^2t+ns^2t^2+2tns^3", relation="r=s", fn=_c4r),
    FormulaMeta("C5", "corollary", T.V, r"HM(G)+(4t+1)M_1(G)+4mt(t+1)+nt^2+nt(16r-24)+12m+9n", fn=_c5),
    FormulaMeta("C6", "corollary", T.VI, r"HM(G)+4tM_1(G)+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt", fn=_c6),
    FormulaMeta("C7", "corollary", T.VII, r"HM(G)+3tM_1(G)+8mt^2+nt^3+4mt(s+1)+2nt^2(s+1)+(s^2+3s+1)nt+2s(s+r)(s+r+1)nt", fn=_c7),
    FormulaMeta("E1a", "example", T.I, r"16n+(8m+4n)t^2+16t(m+rn)-15nt-30t-30", family="path", fn=_e1a),
    FormulaMeta("E1b", "example", T.I, r"16n-15nt+8mt^2+nt^3+4nt^2+16mt+16rnt", family="cycle", fn=_e1b),
    FormulaMeta("E2a", "example", T.II, r"16n-30+16nt-60t+32mt^2+16mt+8nt^3+16nt^2+16rnt", family="path", fn=_e2a),
    FormulaMeta("E2b", "example", T.II, r"16n+32mt^2+16mt+8nt^3+16nt^2+16rnt+16nt", family="cycle", fn=_e2b),
    FormulaMeta("E3a", "example", T.III, r"16n-30+20nrt-20nt-30rt+30t+4mt(t+1)(r-1)^2+n(r-1)^3(t^3+2t^2+2rt-2t)", family="path", fn=_e3a),
    FormulaMeta("E3b", "example", T.III, r"16n+20nrt-20nt+4mt(t+1)(r-1)^2+n(r-1)^3(t^3+2t^2+2(r-1)t)", family="cycle", fn=_e3b),
    FormulaMeta("E4a_rs", "example", T.IV, r"16n-30+16nst-24st+2mst+ns^2t+ns^2t^2+2tns^3", family="path", relation="r=s", fn=_e4a_rs),
    FormulaMeta("E4b_rs", "example", T.IV, r"16n+16nst+2mst+ns^2t+ns^2t^2+2tns^3", family="cycle", relation="r=s", fn=_e4b_rs),
    FormulaMeta("E5a", "example", T.V, r"38n-8nt-8t+4mt^2+4mt+16rnt+12m+nt^2-32", family="path", fn=_e5a),
    FormulaMeta("E5b", "example", T.V, r"29n-8nt+4mt+16rnt+16m+nt^2", family="cycle", fn=_e5b),
    FormulaMeta("E6a", "example", T.VI, r"16n-30+16nt-8t+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt", family="path", fn=_e6a),
    FormulaMeta("E6b", "example", T.VI, r"16n+16nt+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt", family="cycle", fn=_e6b),
    FormulaMeta("E7a", "example", T.VII, r"16n-30+13nt-6t+8mt^2+nt^3+4mts+4mt+2nst^2+2nt^2+9nts^2+7nst", family="path", relation="r=s", fn=_e7a),
    FormulaMeta("E7a_rst", "example", T.VII, r"16n-30+31nr+12nr^3+12mr^2+9nr^2+4mr-6r", family="path", relation="r=s=t", fn=_e7a_rst),
    FormulaMeta("E7b", "example", T.VII, r"16n+13nt+8mt^2+4mt+4mts+9ns^2t+2nst^2+2nt^2+7snt+nt^3", family="cycle", relation="r=s", fn=_e7b),
    FormulaMeta("E7b_rst", "example", T.VII, r"16n+13nr+12mr^2+4mr+12nr^3+9nr^2", family="cycle", relation="r=s=t", fn=_e7b_rst),
]
del T

REGISTRY: dict[str, FormulaMeta] = {f.id: f for f in _ENTRIES}
ORDER: dict[str, int] = {fid: i for i, fid in enumerate(REGISTRY)}


def list_formulas() -> list[FormulaMeta]:
    return list(REGISTRY.values())


def get(formula_id: str) -> FormulaMeta:
    try:
        return REGISTRY[formula_id]
    except KeyError:
        raise FormulaError(f"unknown formula id {formula_id!r}") from None


def registry_hash() -> str:
    """Short digest of every entry's id, domain and printed statement."""
    blob = json.dumps([f.describe() for f in _ENTRIES], sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


# -- applicability & evaluation -------------------------------------------------------

def inapplicable_reason(formula_id: str, family: str | None, n: int, t: Sequence[int],
                        r: int, s: int | None) -> str | None:
    """Why the point lies outside the formula's domain, or ``None`` if it is inside."""
    f = get(formula_id)
    ty = f.thorn_type
    if r < ty.min_r:
        return f"type {ty.value} needs r >= {ty.min_r}"
    if ty.uses_s and (s is None or s < 1):
        return f"type {ty.value} needs s >= 1"
    if len(t) != n:
        return "t length differs from n"
    if any(x < 0 for x in t):
        return "negative thorn count"
    if f.needs_uniform and (n == 0 or len(set(t)) != 1):
        return "needs uniform thorn counts"
    if f.family is not None:
        if family != f.family:
            return f"needs a {f.family} base"
        if n < 3:
            return f"needs a {f.family} on at least 3 vertices"
    if f.relation == "r=s" and r != s:
        return "needs r = s"
    if f.relation == "r=s=t" and not (r == s and t and t[0] == r):
        return "needs r = s = t"
    return None


def applicability(formula_id: str, family: str | None, n: int, t: Sequence[int],
                  r: int, s: int | None) -> bool:
    return inapplicable_reason(formula_id, family, n, t, r, s) is None


def _require(formula_id, family, n, t, r, s) -> FormulaMeta:
    why = inapplicable_reason(formula_id, family, n, t, r, s)
    if why:
        raise FormulaError(f"{formula_id} not applicable: {why}")
    return get(formula_id)


def eval_theorem(formula_id: str, g: Graph, t: Sequence[int], r: int, s: int | None = None) -> int:
    f = _require(formula_id, None, g.n, t, r, s)
    if f.kind not in ("theorem", "proof_variant"):
        raise FormulaError(f"{formula_id} is not a general statement")
    return f.fn(sum_bundle(g, t), r, s)


def eval_theorem_uniform(formula_id: str, n: int, m: int, hm_g: int, m1_g: int,
                         t: int, r: int, s: int | None = None) -> int:
    """A general statement evaluated through the uniform-t reductions of its sums."""
    f = _require(formula_id, None, n, (t,) * n, r, s)
    if f.kind not in ("theorem", "proof_variant"):
        raise FormulaError(f"{formula_id} is not a general statement")
    return f.fn(SumBundle.uniform(n, m, hm_g, m1_g, t), r, s)


def eval_corollary(formula_id: str, n: int, m: int, hm_g: int, m1_g: int,
                   t: int, r: int, s: int | None = None) -> int:
    f = _require(formula_id, None, n, (t,) * n, r, s)
    if f.kind != "corollary":
        raise FormulaError(f"{formula_id} is not a corollary")
    return f.fn(n, m, hm_g, m1_g, t, r, s)


def eval_example(formula_id: str, n: int, t: int, r: int, s: int | None = None) -> int:
    f = get(formula_id)
    if f.kind != "example":
        raise FormulaError(f"{formula_id} is not an example")
    _require(formula_id, f.family, n, (t,) * n, r, s)
    m = n - 1 if f.family == "path" else n
    return f.fn(n, m, t, r, s)


def evaluate(formula_id: str, g: Graph, t: Sequence[int], r: int, s: int | None = None,
             family: str | None = None) -> int:
    """Closed-form value at a point, reading only the base graph."""
    f = get(formula_id)
    if f.kind in ("theorem", "proof_variant"):
        return eval_theorem(formula_id, g, t, r, s)
    _require(formula_id, family, g.n, t, r, s)
    if f.kind == "corollary":
        return eval_corollary(formula_id, g.n, g.m, hm(g), m1(g), t[0], r, s)
    return eval_example(formula_id, g.n, t[0], r, s)
