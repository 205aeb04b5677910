"""Seeded experiment batches over c values or benchmark mixing grids, plus reports.

Seeding scheme: within a batch, run r uses seed seed_base + r, so every c
value sees the same seed sequence (paired comparisons). In benchmark sweeps
the network for grid point (mu index m, network index t) is generated with
seed seed_base + 7919 * m + t.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, replace

from .graph import Graph, parse_edge_list, largest_connected_component, summary
from .lfr import LfrParams, generate
from .lpa import LpaConfig, extract_communities, run_original, run_speedup
from .metrics import ari, modularity, nmi

SCHEMA = "lpakit/report-v1"
DEFAULT_C_GRID = (0.0, 0.05, 0.25, 0.65, 0.8, 1.0)
DEFAULT_MU_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75)
ALGORITHMS = ("speedup", "original")

C_COLUMNS = ("c", "max_q", "avg_q", "avg_updates_per_node", "excluded")
MU_COLUMNS = ("mu", "c", "avg_nmi", "max_nmi", "avg_ari", "max_ari")


@dataclass(frozen=True)
class RunRecord:
    """Per-run outcome kept for aggregation and auditing."""

    c: float
    seed: int
    q: float | None
    communities: int
    effective_updates: int
    attempted_updates: int
    sweeps: int
    converged: bool
    nmi: float | None = None
    ari: float | None = None


@dataclass(frozen=True)
class CRow:
    c: float
    max_q: float | None
    avg_q: float | None
    avg_updates_per_node: float
    excluded: int


@dataclass(frozen=True)
class MuRow:
    mu: float
    c: float
    avg_nmi: float
    max_nmi: float
    avg_ari: float
    max_ari: float


@dataclass
class AggregateReport:
    """Aggregated experiment output; kind is 'detect' or 'sweep'."""

    kind: str
    meta: dict
    c_rows: list[CRow] = field(default_factory=list)
    mu_rows: list[MuRow] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA,
            "kind": self.kind,
            "meta": self.meta,
            "c_rows": [_row_dict(r) for r in self.c_rows],
            "mu_rows": [_row_dict(r) for r in self.mu_rows],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "AggregateReport":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema: {data.get('schema')!r}")
        return cls(
            kind=data["kind"],
            meta=data["meta"],
            c_rows=[CRow(**r) for r in data["c_rows"]],
            mu_rows=[MuRow(**r) for r in data["mu_rows"]],
        )


def _row_dict(row) -> dict:
    return {k: getattr(row, k) for k in row.__dataclass_fields__}


@dataclass
class ExperimentConfig:
    """What to run. Exactly one of input_path / lfr must be set."""

    input_path: str | None = None
    lfr: LfrParams | None = None
    mus: tuple[float, ...] | None = None
    algorithm: str = "speedup"
    c_values: tuple[float, ...] = DEFAULT_C_GRID
    runs: int = 100
    networks: int = 10
    seed_base: int = 0
    use_lcc: bool = True

    def __post_init__(self):
        if (self.input_path is None) == (self.lfr is None):
            raise ValueError("set exactly one of input_path and lfr")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}")
        if self.runs < 1:
            raise ValueError("runs must be positive")
        if self.networks < 1:
            raise ValueError("networks must be positive")
        for c in self.c_values:
            if not 0.0 <= c <= 1.0:
                raise ValueError("all c values must lie in [0, 1]")


def run_batch(g: Graph, algorithm: str, c: float, runs: int, seed_base: int,
              truth=None, with_q: bool = True):
    """Execute seeded runs and return (records, best_labels_by_q)."""
    runner = run_speedup if algorithm == "speedup" else run_original
    records: list[RunRecord] = []
    best_labels = None
    best_q = float("-inf")
    for r in range(runs):
        res = runner(g, LpaConfig(c=c, seed=seed_base + r))
        part = extract_communities(g, res.labels)
        q = modularity(g, part) if with_q and g.m else None
        s_nmi = nmi(part, truth) if truth is not None else None
        s_ari = ari(part, truth) if truth is not None else None
        records.append(RunRecord(c, seed_base + r, q, len(part),
                                 res.effective_updates, res.attempted_updates,
                                 res.sweeps, res.converged, s_nmi, s_ari))
        if q is not None and q > best_q:
            best_q = q
            best_labels = res.labels
    return records, best_labels


def aggregate_c_row(records: list[RunRecord], n: int) -> CRow:
    """Collapse per-run records for one c value into a report row.

    Runs that ended in a single community count as collapsed; at c = 0 they
    are excluded from the modularity average (and reported in `excluded`).
    """
    c = records[0].c
    have_q = [r.q for r in records if r.q is not None]
    max_q = max(have_q) if have_q else None
    if c == 0.0:
        kept = [r.q for r in records if r.communities > 1 and r.q is not None]
        excluded = len(have_q) - len(kept)
    else:
        kept = have_q
        excluded = 0
    avg_q = sum(kept) / len(kept) if kept else None
    upd = sum(r.attempted_updates for r in records) / len(records) / n
    return CRow(c, max_q, avg_q, upd, excluded)


def run_detect(cfg: ExperimentConfig):
    with open(cfg.input_path, "r", encoding="utf-8") as fh:
        g = parse_edge_list(fh)
    if cfg.use_lcc:
        g = largest_connected_component(g)
    rows = []
    best_overall = None
    best_q = float("-inf")
    for c in cfg.c_values:
        records, best_labels = run_batch(g, cfg.algorithm, c, cfg.runs, cfg.seed_base)
        row = aggregate_c_row(records, g.n)
        rows.append(row)
        if row.max_q is not None and row.max_q > best_q:
            best_q = row.max_q
            best_overall = best_labels
    meta = {
        "schema": SCHEMA,
        "source": cfg.input_path,
        "algorithm": cfg.algorithm,
        "runs": cfg.runs,
        "seed_base": cfg.seed_base,
        **summary(g),
    }
    report = AggregateReport("detect", meta, c_rows=rows)
    return report, g, best_overall


def run_sweep(cfg: ExperimentConfig) -> AggregateReport:
    mus = cfg.mus if cfg.mus is not None else (cfg.lfr.mu,)
    rows = []
    for m_idx, mu in enumerate(mus):
        per_c_best_nmi: dict[float, list[float]] = {c: [] for c in cfg.c_values}
        per_c_best_ari: dict[float, list[float]] = {c: [] for c in cfg.c_values}
        for t in range(cfg.networks):
            params = replace(cfg.lfr, mu=mu, seed=cfg.seed_base + 7919 * m_idx + t)
            net = generate(params)
            for c in cfg.c_values:
                records, _ = run_batch(net.graph, cfg.algorithm, c, cfg.runs,
                                       cfg.seed_base, truth=net.truth, with_q=False)
                per_c_best_nmi[c].append(max(r.nmi for r in records))
                per_c_best_ari[c].append(max(r.ari for r in records))
        for c in cfg.c_values:
            bn = per_c_best_nmi[c]
            ba = per_c_best_ari[c]
            rows.append(MuRow(mu, c, sum(bn) / len(bn), max(bn),
                              sum(ba) / len(ba), max(ba)))
    meta = {
        "schema": SCHEMA,
        "algorithm": cfg.algorithm,
        "runs": cfg.runs,
        "networks": cfg.networks,
        "seed_base": cfg.seed_base,
        "lfr": cfg.lfr.to_dict(),
        "mus": list(mus),
    }
    return AggregateReport("sweep", meta, mu_rows=rows)


def run_experiment(cfg: ExperimentConfig) -> AggregateReport:
    """Run the configured experiment and return its aggregated report."""
    if cfg.input_path is not None:
        report, _, _ = run_detect(cfg)
        return report
    return run_sweep(cfg)


def render_csv(report: AggregateReport) -> str:
    """Deterministic CSV rendering of the report's row family."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.kind == "detect":
        writer.writerow(C_COLUMNS)
        for row in report.c_rows:
            d = _row_dict(row)
            writer.writerow(["" if d[col] is None else d[col] for col in C_COLUMNS])
    elif report.kind == "sweep":
        writer.writerow(MU_COLUMNS)
        for row in report.mu_rows:
            d = _row_dict(row)
            writer.writerow([d[col] for col in MU_COLUMNS])
    else:
        raise ValueError(f"unknown report kind: {report.kind!r}")
    return buf.getvalue()


def emit_report(report: AggregateReport, path: str, fmt: str = "csv") -> None:
    """Write the report as CSV or JSON; identical reports give identical bytes."""
    if fmt == "csv":
        text = render_csv(report)
    elif fmt == "json":
        text = report.to_json() + "\n"
    else:
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_ccdf_csv(ccdf, path: str) -> None:
    """Two-column CSV (s, P(S>s)) of a community-size CCDF."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("s", "p_gt"))
        for s, p in ccdf:
            writer.writerow((s, p))
