"""Sweep parameter grids and compare printed closed forms with direct counts.

For every grid point the thorn graph is built and its hyper Zagreb index is
summed edge by edge (the oracle). Each closed form registered for that
construction type is evaluated from the base graph alone and compared by
exact integer equality.
"""

from __future__ import annotations

import csv
import io
import json
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from . import __version__
from . import formula_registry as reg
from .graph_core import BaseSpec, GraphError, is_connected, parse_base
from .indices import hm
from .thorn_builder import ThornSpec, ThornType, build, parse_t

MATCH = "MATCH"
MISMATCH = "MISMATCH"
INAPPLICABLE = "INAPPLICABLE"


class ConfigError(ValueError):
    pass


def _default_bases() -> list[str]:
    return [
        "path:3..8",
        "cycle:3..8",
        "complete:3..6",
        "bipartite:1..4:1..4",
        *(f"random:{4 + i % 5}:{i}" for i in range(20)),
    ]


def _default_t_modes() -> list[str]:
    return [f"uniform:{k}" for k in range(4)] + [f"random:3:{k}" for k in range(5)]


@dataclass
class GridConfig:
    """Audit grid.

    ``bases`` use the base mini-language, where any numeric field may be a
    range ``a..b``. ``r_range`` is raised to each type's minimum. ``t_modes``
    entries are ``uniform:<k>``, ``random:<max>:<seed>`` (drawn per base from
    ``seed``, the mode seed and the base label) or an explicit vector, which is
    used only on bases of matching order.
    """

    bases: list[str] = field(default_factory=_default_bases)
    types: list[str] = field(default_factory=lambda: [t.value for t in ThornType])
    r_range: tuple[int, int] = (1, 6)
    s_range: tuple[int, int] = (1, 4)
    t_modes: list[str] = field(default_factory=_default_t_modes)
    formulas: list[str] = field(default_factory=list)
    require_connected: bool = True
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict) -> "GridConfig":
        unknown = set(data) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**data)
        cfg.r_range = tuple(cfg.r_range)
        cfg.s_range = tuple(cfg.s_range)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        d = asdict(self)
        d["r_range"] = list(self.r_range)
        d["s_range"] = list(self.s_range)
        return d

    def validate(self) -> None:
        for name in ("r_range", "s_range"):
            rng = getattr(self, name)
            if len(rng) != 2 or rng[0] > rng[1] or rng[0] < 1:
                raise ConfigError(f"{name} must be [lo, hi] with 1 <= lo <= hi, got {list(rng)}")
        try:
            [ThornType(t) for t in self.types]
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        for fid in self.formulas:
            if fid not in reg.REGISTRY:
                raise ConfigError(f"unknown formula id {fid!r}")
        for ty in self.swept_types():
            if max(ty.min_r, self.r_range[0]) > self.r_range[1]:
                raise ConfigError(f"r_range {list(self.r_range)} is empty for type {ty.value}")
        for mode in self.t_modes:
            if not re.fullmatch(r"uniform:\d+|random:\d+:\d+|\d+(,\d+)*", mode):
                raise ConfigError(f"bad t mode {mode!r}")
        self.expand_bases()

    def expand_bases(self) -> list[BaseSpec]:
        out = []
        for pattern in self.bases:
            for label in _expand_ranges(pattern):
                try:
                    base = parse_base(label)
                except GraphError as exc:
                    raise ConfigError(str(exc)) from None
                if self.require_connected and not is_connected(base.graph):
                    raise ConfigError(f"base {label} is not connected")
                out.append(base)
        return out

    def selected_formulas(self) -> list[str]:
        return list(self.formulas) if self.formulas else list(reg.REGISTRY)

    def swept_types(self) -> list[ThornType]:
        """Requested types that at least one selected formula is about."""
        wanted = {reg.get(fid).thorn_type for fid in self.selected_formulas()}
        return [ty for ty in ThornType if ty.value in self.types and ty in wanted]

    def t_vectors(self, base: BaseSpec) -> list[tuple[int, ...]]:
        n = base.graph.n
        seen: dict[tuple[int, ...], None] = {}
        for mode in self.t_modes:
            if mode.startswith("random:"):
                _, hi, mseed = mode.split(":")
                rng = random.Random(f"{self.seed}:{mseed}:{base.label}")
                vec = tuple(rng.randint(0, int(hi)) for _ in range(n))
            elif mode.startswith("uniform:"):
                vec = parse_t(mode, n)
            else:
                vec = tuple(int(x) for x in mode.split(","))
                if len(vec) != n:
                    continue
            seen.setdefault(vec)
        return list(seen)


def _expand_ranges(pattern: str) -> list[str]:
    if pattern.startswith("file:"):
        return [pattern]
    head, *fields = pattern.split(":")
    choices = []
    for f in fields:
        m = re.fullmatch(r"(\d+)\.\.(\d+)", f)
        choices.append([str(k) for k in range(int(m[1]), int(m[2]) + 1)] if m else [f])
    labels = [head]
    for opts in choices:
        labels = [f"{lab}:{o}" for lab in labels for o in opts]
    return labels


# -- records -----------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    base: str
    family: str
    n: int
    type: str
    r: int
    s: int | None
    t: tuple[int, ...]

    def sort_key(self) -> tuple:
        return (self.family, self.n, self.r, self.s or 0, self.t, self.base)

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "n": str(self.n),
            "type": self.type,
            "r": str(self.r),
            "s": None if self.s is None else str(self.s),
            "t": [str(x) for x in self.t],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Point":
        s = d["s"]
        return cls(
            base=d["base"],
            family=d["base"].split(":", 1)[0],
            n=int(d["n"]),
            type=d["type"],
            r=int(d["r"]),
            s=None if s is None else int(s),
            t=tuple(int(x) for x in d["t"]),
        )


@dataclass(frozen=True)
class AuditRecord:
    formula: str
    point: Point
    closed: int | None
    oracle: int | None
    status: str

    @property
    def delta(self) -> int | None:
        if self.closed is None or self.oracle is None:
            return None
        return self.closed - self.oracle

    def sort_key(self) -> tuple:
        return (reg.ORDER[self.formula], *self.point.sort_key())

    def to_dict(self) -> dict:
        def num(x):
            return None if x is None else str(x)
        return {
            "formula": self.formula,
            "point": self.point.to_dict(),
            "closed": num(self.closed),
            "oracle": num(self.oracle),
            "delta": num(self.delta),
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AuditRecord":
        def num(x):
            return None if x is None else int(x)
        return cls(d["formula"], Point.from_dict(d["point"]), num(d["closed"]), num(d["oracle"]), d["status"])


@dataclass
class FormulaSummary:
    formula: str
    tested: int = 0
    matched: int = 0
    mismatched: int = 0
    inapplicable: int = 0
    first_counterexample: AuditRecord | None = None

    @property
    def verdict(self) -> str:
        if self.tested == 0:
            return "UNTESTED"
        return MISMATCH if self.mismatched else "ALL_MATCH"

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "formula": self.formula,
            "tested": str(self.tested),
            "matched": str(self.matched),
            "mismatched": str(self.mismatched),
            "inapplicable": str(self.inapplicable),
        }
        if self.first_counterexample is not None:
            d["first_counterexample"] = self.first_counterexample.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FormulaSummary":
        cex = d.get("first_counterexample")
        return cls(
            d["formula"], int(d["tested"]), int(d["matched"]), int(d["mismatched"]),
            int(d["inapplicable"]), AuditRecord.from_dict(cex) if cex else None,
        )


@dataclass
class AuditReport:
    config: dict
    records: list[AuditRecord]
    summary: list[FormulaSummary]
    version: str = ""

    @property
    def mismatches(self) -> int:
        return sum(s.mismatched for s in self.summary)

    def summary_for(self, formula_id: str) -> FormulaSummary:
        for s in self.summary:
            if s.formula == formula_id:
                return s
        raise KeyError(formula_id)

    @classmethod
    def from_dict(cls, d: dict) -> "AuditReport":
        return cls(
            config=d["config"],
            records=[AuditRecord.from_dict(r) for r in d["records"]],
            summary=[FormulaSummary.from_dict(s) for s in d["summary"]],
            version=d["version"],
        )


def version_string() -> str:
    return f"thornlab {__version__} (registry {reg.registry_hash()})"


# -- evaluation ---------------------------------------------------------------------

def compare(formula_id: str, base: BaseSpec, spec: ThornSpec) -> AuditRecord:
    """One closed form against the oracle at one point.

    The closed value reads only the base graph; the oracle reads only the
    constructed graph.
    """
    f = reg.get(formula_id)
    if ThornType(spec.type) is not f.thorn_type:
        raise reg.FormulaError(f"{formula_id} is about type {f.thorn_type.value}, not {spec.type.value}")
    point = Point(base.label, base.family, base.graph.n, spec.type.value, spec.r, spec.s, spec.t)
    oracle = hm(build(base.graph, spec).graph)
    return _record(f, base, point, oracle)


def _record(f: reg.FormulaMeta, base: BaseSpec, point: Point, oracle: int) -> AuditRecord:
    if not reg.applicability(f.id, base.family, point.n, point.t, point.r, point.s):
        return AuditRecord(f.id, point, None, None, INAPPLICABLE)
    closed = reg.evaluate(f.id, base.graph, point.t, point.r, point.s, base.family)
    return AuditRecord(f.id, point, closed, oracle, MATCH if closed == oracle else MISMATCH)


def _points(cfg: GridConfig, base: BaseSpec, types: list[ThornType]) -> Iterable[ThornSpec]:
    lo, hi = cfg.r_range
    for ty in types:
        s_values = range(cfg.s_range[0], cfg.s_range[1] + 1) if ty.uses_s else [None]
        for r in range(max(lo, ty.min_r), hi + 1):
            for s in s_values:
                for t in cfg.t_vectors(base):
                    yield ThornSpec(ty, r=r, t=t, s=s)


def _audit_base(args: tuple[GridConfig, BaseSpec, list[str]]) -> list[AuditRecord]:
    cfg, base, formula_ids = args
    metas = [reg.get(fid) for fid in formula_ids]
    out = []
    for spec in _points(cfg, base, cfg.swept_types()):
        point = Point(base.label, base.family, base.graph.n, spec.type.value, spec.r, spec.s, spec.t)
        oracle = hm(build(base.graph, spec).graph)
        out.extend(_record(f, base, point, oracle) for f in metas if f.thorn_type is spec.type)
    return out


def run(cfg: GridConfig, workers: int = 1) -> AuditReport:
    cfg.validate()
    formula_ids = cfg.selected_formulas()
    jobs = [(cfg, base, formula_ids) for base in cfg.expand_bases()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_audit_base, jobs))
    else:
        chunks = [_audit_base(job) for job in jobs]
    records = sorted((r for chunk in chunks for r in chunk), key=AuditRecord.sort_key)

    summary = {fid: FormulaSummary(fid) for fid in formula_ids}
    for rec in records:
        s = summary[rec.formula]
        if rec.status == INAPPLICABLE:
            s.inapplicable += 1
            continue
        s.tested += 1
        if rec.status == MATCH:
            s.matched += 1
        else:
            s.mismatched += 1
            if s.first_counterexample is None:
                s.first_counterexample = rec
    ordered = sorted(summary.values(), key=lambda s: reg.ORDER[s.formula])
    return AuditReport(cfg.to_dict(), records, ordered, version_string())


def first_counterexample(formula_id: str, cfg: GridConfig, workers: int = 1) -> AuditRecord | None:
    narrowed = GridConfig.from_dict({**cfg.to_dict(), "formulas": [formula_id]})
    return run(narrowed, workers).summary_for(formula_id).first_counterexample


def recheck(rec: AuditRecord) -> AuditRecord:
    """Re-evaluate a record from scratch (base rebuilt from its label)."""
    base = parse_base(rec.point.base)
    spec = ThornSpec(ThornType(rec.point.type), rec.point.r, rec.point.t, rec.point.s)
    return compare(rec.formula, base, spec)


# -- rendering ----------------------------------------------------------------------------

def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def render(report: AuditReport, fmt: str = "json") -> str:
    if fmt == "json":
        return _render_json(report)
    if fmt == "csv":
        return _render_csv(report)
    if fmt in ("markdown", "md"):
        return _render_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")


def _render_json(report: AuditReport) -> str:
    # one summary entry / record per line keeps large reports diffable
    lines = ["{", f'"version":{_dumps(report.version)},', f'"config":{_dumps(report.config)},']
    lines.append('"summary":[')
    lines.append(",\n".join(_dumps(s.to_dict()) for s in report.summary))
    lines.append("],")
    lines.append('"records":[')
    lines.append(",\n".join(_dumps(r.to_dict()) for r in report.records))
    lines.append("]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> AuditReport:
    return AuditReport.from_dict(json.loads(text))


CSV_FIELDS = ["formula", "base", "n", "type", "r", "s", "t", "closed", "oracle", "delta", "status"]


def _render_csv(report: AuditReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec in report.records:
        p = rec.point
        w.writerow([
            rec.formula, p.base, p.n, p.type, p.r, "" if p.s is None else p.s,
            " ".join(map(str, p.t)),
            *("" if x is None else x for x in (rec.closed, rec.oracle, rec.delta)),
            rec.status,
        ])
    return buf.getvalue()


def _render_markdown(report: AuditReport) -> str:
    lines = [
        f"# Audit summary ({report.version})",
        "",
        "| formula | kind | type | tested | matched | mismatched | inapplicable | first counterexample |",
        "|---|---|---|---:|---:|---:|---:|---|",
    ]
    for s in report.summary:
        meta = reg.get(s.formula)
        cex = ""
        if s.first_counterexample is not None:
            c = s.first_counterexample
            p = c.point
            s_part = "" if p.s is None else f", s={p.s}"
            cex = (f"{p.base}, r={p.r}{s_part}, t=({','.join(map(str, p.t))}): "
                   f"closed {c.closed}, oracle {c.oracle}, delta {c.delta}")
        lines.append(
            f"| {s.formula} | {meta.kind} | {meta.thorn_type.value} | {s.tested} | {s.matched} "
            f"| {s.mismatched} | {s.inapplicable} | {cex} |"
        )
    lines.append("")
    lines.append(f"Total mismatching records: {report.mismatches}")
    return "\n".join(lines) + "\n"
