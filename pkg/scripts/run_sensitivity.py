"""Oracle-sensitivity experiments: distinct-neighbor connectivity and matching indistinguishability."""

import argparse

from planartest.core import make_rng
from planartest.instances import cycle, matching
from planartest.testers import connectivity_test_distinct, matching_indistinguishability

p = argparse.ArgumentParser()
p.add_argument("--n", type=int, default=100)
p.add_argument("--eps", type=float, default=0.25)
p.add_argument("--trials", type=int, default=10_000)
p.add_argument("--seed", type=int, default=0)
a = p.parse_args()

for name, G in (("cycle", cycle(a.n)), ("matching", matching(a.n))):
    rej = sum(connectivity_test_distinct(G, a.eps, make_rng(a.seed, t)).reject for t in range(a.trials))
    print(f"connectivity {name}:{a.n} reject_rate={rej / a.trials:.6f}")
for q in range(1, 7):
    r = matching_indistinguishability(q, a.n, a.trials, make_rng(a.seed))
    print(f"matching q={q} frequency={r.frequency:.6f} 2^-q={r.bound:.6f} ok={r.ok}")
