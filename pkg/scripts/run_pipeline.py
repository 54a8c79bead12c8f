"""Pipeline reports over disjoint-copy instances of small planar patterns."""

import argparse

from planartest.harness import run_pipeline_report
from planartest.instances import disjoint_copies, named_pattern

p = argparse.ArgumentParser()
p.add_argument("--patterns", default="triangle,paw,diamond,path3,c4,star3")
p.add_argument("--copies", type=int, default=8)
p.add_argument("--pad", type=int, default=2)
p.add_argument("--eps", type=float, default=0.1)
p.add_argument("--seeds", type=int, default=3)
a = p.parse_args()

bad = 0
for name in a.patterns.split(","):
    H = named_pattern(name)
    G = disjoint_copies(H, a.copies, a.pad)
    for seed in range(a.seeds):
        r = run_pipeline_report(G, H, a.eps, seed)
        bad += not r.ok
        print(f"--- {name} seed={seed}")
        print(r.text(), end="")
print(f"reports with a failed bound: {bad}")
