"""Experiment sweeps: sample, analyze, search cuts, and persist one CSV row
per (n, seed, delta) cell.  Sweeps are fully deterministic: identical config
gives byte-identical CSV output."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .cuts import (
    CutResult,
    geometric_box_cut,
    geometric_halfspace_cut,
    local_search_cut,
    refine_cut,
)
from .geometry import GeometrySpec
from .graph import GirgGraph
from .graphstats import clustering_coefficient, connected_components, degree_report
from .sampler import ModelParams, sample_direct

__all__ = [
    "ExperimentConfig",
    "ScalingRecord",
    "run_sweep",
    "best_cut",
    "fit_scaling_exponent",
    "records_to_csv",
    "write_csv",
    "emit_plot_data",
]


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep description.  ``f`` rides along for phased-sampler
    experiments built on the same cells; the scaling sweep itself samples
    with the direct sampler."""

    geometry_kind: str
    d: int
    n_values: tuple[int, ...]
    alpha: float
    beta: float
    prefactor_c: float = 1.0
    deltas: tuple[float, ...] = (0.1,)
    f: float = 0.0
    seeds: tuple[int, ...] = (1,)
    restarts: int = 10
    pass_limit: int = 50
    max_positions: int = 1024
    degree_cutoff: float = 8.0
    volume_mode: Optional[str] = None
    output_dir: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "deltas", tuple(float(d) for d in self.deltas))
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if not self.seeds:
            raise ValueError("at least one seed is required")
        if not self.n_values or min(self.n_values) < 16:
            raise ValueError("all n values must be >= 16")
        if not self.deltas:
            raise ValueError("at least one delta is required")

    def model(self, n: int, seed: int) -> ModelParams:
        return ModelParams(
            d=self.d,
            n=n,
            alpha=self.alpha,
            beta=self.beta,
            prefactor_c=self.prefactor_c,
            geometry=GeometrySpec(self.geometry_kind, self.d, self.volume_mode),
            seed=seed,
        )


@dataclass(frozen=True)
class ScalingRecord:
    geometry: str
    d: int
    n: int
    seed: int
    delta: float
    giant_size: int
    giant_fraction: float
    best_cut_cross_edges: int
    best_cut_method: str
    eta_achieved: float
    mean_cc: float
    degree_tail_exponent: float  # NaN when the fit is rejected
    runtime_ms: float


def best_cut(
    g: GirgGraph,
    giant: np.ndarray,
    delta: float,
    restarts: int = 10,
    pass_limit: int = 50,
    max_positions: int = 1024,
    seed: int = 0,
) -> CutResult:
    """Minimum over the geometric families (slab per axis, box in d=2, each
    polished by the local-search passes) and the plain local search; earliest
    method wins ties."""
    geometric: list[CutResult] = []
    for axis in range(g.dimension):
        try:
            geometric.append(geometric_halfspace_cut(g, giant, axis, delta, max_positions))
        except ValueError:
            continue
    if g.dimension == 2:
        try:
            geometric.append(geometric_box_cut(g, giant, delta))
        except ValueError:
            pass
    results: list[CutResult] = []
    for cut in geometric:
        results.append(cut)
        if cut.feasible:
            results.append(refine_cut(g, cut, pass_limit=pass_limit))
    results.append(
        local_search_cut(g, giant, delta, restarts=restarts, seed=seed, pass_limit=pass_limit)
    )
    feasible = [r for r in results if r.feasible]
    pool = feasible if feasible else results
    return min(pool, key=lambda r: r.cross_edge_count)


def run_sweep(config: ExperimentConfig, csv_path=None) -> list[ScalingRecord]:
    """One record per (n, seed, delta), in config order.  Writes the CSV when
    a path or config.output_dir is given."""
    records: list[ScalingRecord] = []
    for n in config.n_values:
        for seed in config.seeds:
            t0 = time.perf_counter()
            params = config.model(n, seed)
            g = sample_direct(params)
            lab = connected_components(g)
            giant = np.flatnonzero(lab.labels == lab.giant_label).astype(np.int64)
            cc = clustering_coefficient(g)
            deg = degree_report(g, cutoff=config.degree_cutoff)
            for delta in config.deltas:
                cut = best_cut(
                    g,
                    giant,
                    delta,
                    restarts=config.restarts,
                    pass_limit=config.pass_limit,
                    max_positions=config.max_positions,
                    seed=seed,
                )
                records.append(
                    ScalingRecord(
                        geometry=config.geometry_kind,
                        d=config.d,
                        n=n,
                        seed=seed,
                        delta=delta,
                        giant_size=lab.giant_size,
                        giant_fraction=lab.giant_size / n,
                        best_cut_cross_edges=cut.cross_edge_count,
                        best_cut_method=cut.method,
                        eta_achieved=cut.eta_achieved,
                        mean_cc=cc.mean,
                        degree_tail_exponent=(
                            deg.tail_exponent if deg.tail_exponent is not None else float("nan")
                        ),
                        runtime_ms=(time.perf_counter() - t0) * 1000.0,
                    )
                )
    if csv_path is None and config.output_dir is not None:
        csv_path = Path(config.output_dir) / "sweep.csv"
    if csv_path is not None:
        write_csv(records, csv_path)
    return records


# ---------------------------------------------------------------------------
# scaling fit
# ---------------------------------------------------------------------------


def fit_scaling_exponent(records: Sequence[ScalingRecord]) -> tuple[float, float]:
    """Least-squares slope of log(mean best cut) against log(n), with a 95%
    half-width from the residual standard error.

    Requires at least 4 distinct n values with at least 3 records each.
    """
    by_n: dict[int, list[int]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec.best_cut_cross_edges)
    if len(by_n) < 4 or min(len(v) for v in by_n.values()) < 3:
        raise ValueError("need >= 4 distinct n values with >= 3 records each")
    ns = np.array(sorted(by_n), dtype=np.float64)
    means = np.array([np.mean(by_n[int(n)]) for n in ns])
    if np.any(means <= 0):
        raise ValueError("mean best cut must be positive to fit a log-log slope")
    x = np.log(ns)
    y = np.log(means)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    dof = max(x.size - 2, 1)
    se = np.sqrt(resid @ resid / dof / ((x - x.mean()) @ (x - x.mean())))
    return float(slope), float(1.96 * se)


# ---------------------------------------------------------------------------
# CSV persistence
# ---------------------------------------------------------------------------

_FIELDS = [f.name for f in fields(ScalingRecord)]


def _cell(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def records_to_csv(records: Sequence[ScalingRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_FIELDS)
    for rec in records:
        writer.writerow([_cell(getattr(rec, name)) for name in _FIELDS])
    return buf.getvalue()


def write_csv(records: Sequence[ScalingRecord], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(records_to_csv(records), encoding="utf-8", newline="\n")
    return path


def read_csv(path) -> list[ScalingRecord]:
    with open(path, "r", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        out = []
        for row in reader:
            out.append(
                ScalingRecord(
                    geometry=row["geometry"],
                    d=int(row["d"]),
                    n=int(row["n"]),
                    seed=int(row["seed"]),
                    delta=float(row["delta"]),
                    giant_size=int(row["giant_size"]),
                    giant_fraction=float(row["giant_fraction"]),
                    best_cut_cross_edges=int(row["best_cut_cross_edges"]),
                    best_cut_method=row["best_cut_method"],
                    eta_achieved=float(row["eta_achieved"]),
                    mean_cc=float(row["mean_cc"]),
                    degree_tail_exponent=float(row["degree_tail_exponent"]),
                    runtime_ms=float(row["runtime_ms"]),
                )
            )
        return out


# ---------------------------------------------------------------------------
# plot data
# ---------------------------------------------------------------------------

_SERIES_METRICS = (
    ("best_cut", lambda r: r.best_cut_cross_edges),
    ("eta_achieved", lambda r: r.eta_achieved),
    ("mean_cc", lambda r: r.mean_cc),
    ("giant_fraction", lambda r: r.giant_fraction),
)


def emit_plot_data(records: Sequence[ScalingRecord], out_dir) -> list[Path]:
    """Per-(geometry, metric) TSV series averaged over seeds, plus an SVG with
    the log-log cut scaling and cc against n.  Re-rendering identical records
    is byte-identical."""
    if not records:
        raise ValueError("no records to plot")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    geoms = sorted({r.geometry for r in records})
    written: list[Path] = []
    series: dict[tuple[str, str], tuple[np.ndarray, np.ndarray]] = {}
    for geom in geoms:
        sub = [r for r in records if r.geometry == geom]
        ns = sorted({r.n for r in sub})
        for metric, getter in _SERIES_METRICS:
            ys = [float(np.mean([getter(r) for r in sub if r.n == n])) for n in ns]
            path = out_dir / f"{metric}_{geom}.tsv"
            lines = ["n\t" + metric] + [f"{n}\t{format(y, '.17g')}" for n, y in zip(ns, ys)]
            path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
            written.append(path)
            series[(geom, metric)] = (np.array(ns, dtype=float), np.array(ys))
    written.append(_render_svg(series, geoms, out_dir / "scaling.svg"))
    return written


def _render_svg(series, geoms, path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with matplotlib.rc_context({"svg.hashsalt": "girglab"}):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
        for geom in geoms:
            ns, cuts = series[(geom, "best_cut")]
            ax1.loglog(ns, cuts, marker="o", label=geom)
            ns, ccs = series[(geom, "mean_cc")]
            ax2.semilogx(ns, ccs, marker="o", label=geom)
        ax1.set_xlabel("n")
        ax1.set_ylabel("best cut (cross edges)")
        ax1.legend()
        ax2.set_xlabel("n")
        ax2.set_ylabel("mean clustering coefficient")
        ax2.set_ylim(bottom=0.0)
        ax2.legend()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
