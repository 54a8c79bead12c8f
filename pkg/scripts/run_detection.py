"""Detection-rate sweep on the single-triangle calibration instance.

Writes results/detection.csv plus a plotting script next to it.
"""

import argparse
from pathlib import Path

from planartest.harness import ExperimentConfig, emit_plot_script, parse_grid, run_detection_experiment

p = argparse.ArgumentParser()
p.add_argument("--instance", default="copies:triangle:1:0")
p.add_argument("--h", default="triangle")
p.add_argument("--eps", type=float, default=0.3)
p.add_argument("--trials", type=int, default=10_000)
p.add_argument("--seed", type=int, default=0)
p.add_argument("--out", default="results/detection.csv")
a = p.parse_args()

grid = parse_grid([f"2,2,{f}" for f in (1, 2, 4, 8, 16)] + ["3,2,1", "2,3,1"])
out = Path(a.out)
out.parent.mkdir(parents=True, exist_ok=True)
rows = run_detection_experiment(ExperimentConfig(a.instance, a.h, a.eps, grid, a.trials, a.seed, out))
emit_plot_script(out, out.with_suffix(".plot.py"))
for r in rows:
    print(f"dg={r.params.dg} ld={r.params.ld} f={r.params.f} reject_rate={r.reject_rate:.4f}"
          f" mean_queries={r.mean_queries:.2f} bound={r.query_bound}")
