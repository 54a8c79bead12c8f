"""Seeded detection experiments over a parameter grid, emitted as CSV."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from planartest.core import Graph, QueryMeter, make_rng
from planartest.errors import InvalidSpec, PlanarTestError
from planartest.instances import gen_instance, named_pattern, parse_instance_spec
from planartest.match.packing import as_fraction
from planartest.testers import TesterParams, rbe

CSV_COLUMNS = (
    "instance",
    "pattern",
    "eps",
    "dg",
    "ld",
    "f",
    "trials",
    "rejects",
    "reject_rate",
    "mean_queries",
    "max_queries",
    "query_bound",
    "wall_ms",
)


@dataclass(frozen=True)
class ExperimentConfig:
    instance: str
    pattern: str
    eps: float
    grid: tuple[TesterParams, ...]
    trials: int = 10_000
    seed: int = 0
    output: Path | None = None
    timing: bool = False

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidSpec("trials must be >= 1")
        if not self.grid:
            raise InvalidSpec("parameter grid is empty")
        if not 0 < as_fraction(self.eps) < 1:
            raise InvalidSpec("eps must lie in (0, 1)")


@dataclass(frozen=True)
class ExperimentRow:
    instance: str
    pattern: str
    eps: float
    params: TesterParams
    trials: int
    rejects: int
    total_queries: int
    max_queries: int
    wall_ms: int = 0
    query_bound: int = field(init=False)

    def __post_init__(self) -> None:
        if not 0 <= self.rejects <= self.trials:
            raise ValueError("rejects must lie in [0, trials]")
        object.__setattr__(self, "query_bound", self.params.rbe_bound())

    @property
    def reject_rate(self) -> float:
        return self.rejects / self.trials

    @property
    def mean_queries(self) -> float:
        return self.total_queries / self.trials

    @property
    def within_bound(self) -> bool:
        return self.max_queries <= self.query_bound

    def as_record(self) -> list[str]:
        p = self.params
        return [
            self.instance,
            self.pattern,
            f"{self.eps:.6f}",
            str(p.dg),
            str(p.ld),
            str(p.f),
            str(self.trials),
            str(self.rejects),
            f"{self.reject_rate:.6f}",
            f"{self.mean_queries:.6f}",
            str(self.max_queries),
            str(self.query_bound),
            str(self.wall_ms),
        ]


def parse_grid(items: Sequence[str]) -> tuple[TesterParams, ...]:
    """Parse ``dg,ld,f`` triples."""
    out = []
    for item in items:
        try:
            dg, ld, f = (int(x) for x in item.split(","))
            out.append(TesterParams(f=f, ld=ld, dg=dg))
        except ValueError:
            raise InvalidSpec(f"grid cell {item!r} is not dg,ld,f with positive integers") from None
    return tuple(out)


def run_cell(
    G: Graph, H: Graph, eps: float | Fraction, params: TesterParams, trials: int, seed: int | str
) -> tuple[int, int, int]:
    """(rejects, total queries, max queries) over ``trials`` seeded rbe runs."""
    rejects = total = worst = 0
    for t in range(trials):
        meter = QueryMeter()
        v = rbe(G, H, eps, params, make_rng(seed, t), meter)
        rejects += v.reject
        q = meter.total
        total += q
        worst = max(worst, q)
    return rejects, total, worst


def run_detection_experiment(
    config: ExperimentConfig, G: Graph | None = None, H: Graph | None = None
) -> list[ExperimentRow]:
    """One row per grid cell, in grid order; cell ``c`` uses seed stream ``"{seed}/{c}"``."""
    H = H if H is not None else named_pattern(config.pattern)
    G = G if G is not None else gen_instance(parse_instance_spec(config.instance))
    rows = []
    for c, params in enumerate(config.grid):
        t0 = time.perf_counter()
        rejects, total, worst = run_cell(G, H, config.eps, params, config.trials, f"{config.seed}/{c}")
        ms = round((time.perf_counter() - t0) * 1000) if config.timing else 0
        row = ExperimentRow(config.instance, config.pattern, config.eps, params, config.trials, rejects, total, worst, ms)
        if not row.within_bound:
            raise PlanarTestError(f"cell {c}: {row.max_queries} queries exceed the bound {row.query_bound}")
        rows.append(row)
    if config.output is not None:
        Path(config.output).write_text(rows_to_csv(rows), newline="")
    return rows


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.as_record())
    return buf.getvalue()


_PLOT_TEMPLATE = '''"""Plot reject_rate and mean_queries per grid cell from {csv_name}."""

import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else {csv_path!r}
with open(path, newline="") as fh:
    rows = list(csv.DictReader(fh))
labels = [f"dg={{r['dg']}} ld={{r['ld']}} f={{r['f']}}" for r in rows]
fig, (a, b) = plt.subplots(1, 2, figsize=(10, 4))
a.bar(labels, [float(r["reject_rate"]) for r in rows])
a.set_ylabel("reject_rate")
b.bar(labels, [float(r["mean_queries"]) for r in rows], label="mean_queries")
b.plot(labels, [int(r["query_bound"]) for r in rows], "k--", label="query_bound")
b.set_yscale("log")
b.legend()
for ax in (a, b):
    ax.tick_params(axis="x", rotation=45)
fig.tight_layout()
fig.savefig(path.rsplit(".", 1)[0] + ".png")
'''


def emit_plot_script(csv_path: str | Path, script_path: str | Path) -> Path:
    """Write (but do not run) a matplotlib script reading the CSV columns."""
    p = Path(script_path)
    p.write_text(_PLOT_TEMPLATE.format(csv_name=Path(csv_path).name, csv_path=str(csv_path)))
    return p
