"""Acceptance criteria 1-12; each test records one PASS or FAIL line."""

import itertools
import math
import random
import statistics
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE
from corpus import far_corpus
from oracles import final_level_reject_probability, rlbd_reject_probability
from planartest.core import Coloring, QueryMeter, build_graph, make_rng
from planartest.harness import ExperimentConfig, run_detection_experiment, run_pipeline_report
from planartest.harness.stats import amplified, amplified_sigma, at_least, binomial_sigma, within_sigmas
from planartest.instances import (
    cycle,
    disjoint_copies,
    grid,
    matching,
    named_pattern,
    path,
    relabel,
    star,
    triangulation_patch,
)
from planartest.match.audit import semi_subgraph_freeness_audit
from planartest.match.embed import contains_copy, enumerate_copies
from planartest.match.graphs import all_graphs
from planartest.match.packing import CopySet, best_coloring, exact_deletion_distance, survival_probability
from planartest.pipeline import (
    build_Q,
    degree_prune,
    distinct_neighbor_count,
    hrlbd,
    is_consistent,
    next_level,
    pattern_at,
    representatives,
    shadow,
    shrink_pattern,
)
from planartest.testers import TesterParams, connectivity_test_distinct, family_test, matching_indistinguishability, rbe, rlbd


def record(num, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def colored_copies(H, k, pad=0):
    """Disjoint copies where vertex a of every copy has color a; padding has color 1."""
    G = disjoint_copies(H, k, pad)
    col = Coloring.from_list([(v - 1) % H.n + 1 if v <= k * H.n else 1 for v in G.vertices()])
    return G, CopySet(H, tuple(enumerate_copies(G, H, coloring=col)), col)


# 1. one-sided error

def binary_tree(n):
    return build_graph(n, [(v // 2, v) for v in range(2, n + 1)])


FREE_HOSTS = {
    "triangle": [grid(4, 4), grid(5, 5), grid(3, 7), grid(6, 6), grid(2, 9), cycle(5), cycle(8), cycle(13), cycle(20), matching(12)],
    "c4": [cycle(3), cycle(5), cycle(7), cycle(12), path(10), star(6), binary_tree(15), disjoint_copies(named_pattern("triangle"), 4, 2), matching(10), disjoint_copies(named_pattern("c5"), 2, 1)],
    "k4": [grid(4, 4), grid(5, 6), triangulation_patch(3, 3), triangulation_patch(4, 5), triangulation_patch(2, 8), cycle(4), cycle(9), disjoint_copies(named_pattern("diamond"), 3, 0), binary_tree(12), star(5)],
    "path3": [matching(2), matching(4), matching(6), matching(10), matching(16), matching(24), disjoint_copies(named_pattern("k2"), 3, 3), disjoint_copies(named_pattern("k2"), 5, 1), build_graph(7, [(2, 5)]), build_graph(9, [(1, 9), (3, 4)])],
}
PINNED = TesterParams(f=1, ld=2, dg=2)
RUNS = 10_000


def test_criterion_01_one_sided_error():
    start = time.perf_counter()
    patterns = {name: named_pattern(name) for name in FREE_HOSTS}
    rejects = runs = 0
    for name, hosts in FREE_HOSTS.items():
        H = patterns[name]
        for j, G in enumerate(hosts):
            G = relabel(G, random.Random(j))
            assert not contains_copy(G, H), (name, j)
            family = [F for F in patterns.values() if not contains_copy(G, F)]
            for t in range(RUNS):
                rejects += rbe(G, H, 0.1, PINNED, make_rng(f"{name}/{j}", t)).reject
                rejects += family_test(G, family, 0.1, PINNED, make_rng(f"{name}/{j}/family", t)).reject
                runs += 2
    elapsed = time.perf_counter() - start
    record(1, "one-sided error on H-free planar hosts", rejects == 0 and elapsed < 60, f"{rejects}/{runs} rejects, {elapsed:.1f}s")


# 2. query bound

def test_criterion_02_query_bound():
    hosts = [grid(5, 5), triangulation_patch(4, 4), disjoint_copies(named_pattern("paw"), 5, 2), cycle(9), star(7)]
    H = named_pattern("triangle")
    worst = 0.0
    ok = True
    for dg, ld in itertools.product((1, 2, 3), (1, 2)):
        bound = 1 + 2 * dg**ld
        for j, G in enumerate(hosts):
            for t in range(300):
                m = QueryMeter()
                rlbd(G, H, dg, ld, m, make_rng(j, t))
                ok &= m.total <= bound
                worst = max(worst, m.total / bound)
    for dg, ld in itertools.product((2, 3), (3, 4)):
        bound = 1 + 2 * dg**ld
        for t in range(100):
            m = QueryMeter()
            rlbd(hosts[1], H, dg, ld, m, make_rng("deep", t))
            ok &= m.total <= bound
    for f in (1, 3, 7):
        p = TesterParams(f=f, ld=2, dg=3)
        for t in range(200):
            m = QueryMeter()
            rbe(hosts[0], H, 0.1, p, make_rng("rbe", t), m)
            ok &= m.total <= f * (1 + 2 * 3**2)
    cfg = ExperimentConfig(
        "tri:4x4", "triangle", 0.1, tuple(TesterParams(f=f, ld=ld, dg=dg) for dg, ld, f in [(2, 2, 1), (3, 2, 4), (2, 3, 2), (4, 1, 8)]),
        trials=500, seed=3,
    )
    rows = run_detection_experiment(cfg)
    rows_ok = all(r.max_queries <= r.params.f * (1 + 2 * r.params.dg**r.params.ld) == r.query_bound for r in rows)
    record(2, "query bounds for rlbd, rbe and experiment rows", ok and rows_ok, f"max meter/bound {worst:.3f}")


# 3. detection calibration

TRI = named_pattern("triangle")
CALIB = disjoint_copies(TRI, 1, 0)


def test_criterion_03_detection_calibration():
    start = time.perf_counter()
    exact = rlbd_reject_probability(CALIB, TRI, 2, 2)
    trials = 100_000
    rng = make_rng(33)
    hits = sum(rlbd(CALIB, TRI, 2, 2, QueryMeter(), rng).reject for _ in range(trials))
    rate = hits / trials
    elapsed = time.perf_counter() - start
    ok = exact == Fraction(15, 32) and within_sigmas(rate, float(exact), trials) and elapsed < 30
    record(3, "rlbd(2,2) on one triangle vs choice-tree enumeration", ok, f"exact {exact}, empirical {rate:.5f}, {elapsed:.1f}s")


# 4. amplification

def test_criterion_04_amplification():
    calib_trials = 50_000
    rng = make_rng(44)
    p_hat = sum(rlbd(CALIB, TRI, 2, 2, QueryMeter(), rng).reject for _ in range(calib_trials)) / calib_trials
    trials = 10_000
    details = []
    ok = True
    for f in (1, 2, 4, 8, 16):
        p = TesterParams(f=f, ld=2, dg=2)
        r = make_rng(44, f)
        rate = sum(rbe(CALIB, TRI, 0.1, p, r).reject for _ in range(trials)) / trials
        pred = amplified(p_hat, f)
        ok &= abs(rate - pred) <= 4 * amplified_sigma(p_hat, f, calib_trials, trials)
        details.append(f"f={f}:{rate:.4f}/{pred:.4f}")
    f_star = math.ceil(5 / p_hat)
    p = TesterParams(f=f_star, ld=2, dg=2)
    r = make_rng(44, "star")
    rate = sum(rbe(CALIB, TRI, 0.1, p, r).reject for _ in range(trials)) / trials
    ok &= at_least(rate, 0.99, trials)
    details.append(f"f={f_star}:{rate:.4f}")
    record(4, "amplification 1-(1-p)^f", ok, " ".join(details))


# 5. packing lower bound

def small_far_instances(count=50, seed=55):
    rng = random.Random(seed)
    names = ["triangle", "path3", "c4", "paw", "k2", "star3", "diamond"]
    out = []
    while len(out) < count:
        H = named_pattern(rng.choice(names))
        kind = rng.choice(("copies", "tri", "grid"))
        if kind == "copies":
            G = disjoint_copies(H, rng.randint(1, 5), rng.randint(0, 4))
        elif kind == "tri":
            G = triangulation_patch(rng.randint(2, 3), rng.randint(2, 4))
        else:
            G = grid(rng.randint(2, 3), rng.randint(2, 4))
        if G.m > 40:
            continue
        G = relabel(G, rng)
        dist = exact_deletion_distance(G, H)
        if dist == 0:
            continue
        out.append((G, H, Fraction(dist, 2 * G.n), dist))
    return out


def test_criterion_05_packing_lower_bound():
    ok = True
    worst_z = 0.0
    for j, (G, H, eps, dist) in enumerate(small_far_instances()):
        assert dist > eps * G.n
        bc = best_coloring(G, H, rng=make_rng(55, j))
        ok &= len(bc.packing) >= math.ceil(eps * G.n / H.m)
        expected = len(bc.packing) * float(survival_probability(H))
        mean = statistics.fmean(bc.counts)
        se = statistics.stdev(bc.counts) / math.sqrt(len(bc.counts)) if len(bc.counts) > 1 else 0.0
        if se == 0:
            ok &= mean == expected
        else:
            z = abs(mean - expected) / se
            worst_z = max(worst_z, z)
            ok &= z <= 4
        ok &= len(bc.copies) >= 1 or expected < 1
    record(5, "greedy packing size and colored-copy expectation", ok, f"worst |z| {worst_z:.2f}")


# 6. shrink invariants

def test_criterion_06_shrink_invariants():
    start = time.perf_counter()
    ok = True
    checked = 0
    for h in range(1, 6):
        for H in all_graphs(h):
            if not H.is_connected():
                continue
            for order in itertools.permutations(range(1, h + 1)):
                Ms = shrink_pattern(H, order)
                ok &= len(Ms) == h and all(not M.violations(H) for M in Ms)
                if h > 1:
                    Mh = Ms[-1]
                    labels = [e.label for e in Mh.edges]
                    ok &= Mh.vertices == {order[-1]} and all(e.is_selfloop for e in Mh.edges)
                    ok &= set().union(*labels) == set(order[:-1]) and sum(map(len, labels)) == h - 1
                checked += 1
    elapsed = time.perf_counter() - start
    record(6, "shrink invariants over all connected H (h<=5) and all orders", ok and elapsed < 60, f"{checked} (H, order) pairs, {elapsed:.1f}s")


# 7 and 8. pipeline bounds and shadow soundness

@pytest.fixture(scope="module")
def corpus_chains():
    out = []
    for inst in far_corpus(30):
        r = make_rng(inst.seed)
        bc = best_coloring(inst.G, inst.H, rng=r)
        D = degree_prune(bc.copies, inst.G)
        levels = []
        prefix = ()
        Dc, Q = D, build_Q(D, ())
        for _ in range(inst.H.n - 1):
            sh = shadow(Q, Dc, prefix)
            step = next_level(Dc, Q, prefix, r, sh)
            levels.append((prefix, Dc, Q, sh, step))
            prefix += (step.vertex,)
            Dc, Q = step.copies, step.Q
        out.append((inst, bc, D, levels))
    return out


def test_criterion_07_pipeline_bounds(corpus_chains):
    ok = True
    steps = 0
    for inst, bc, D, levels in corpus_chains:
        h = inst.H.n
        ok &= 2 * len(D) >= len(bc.copies)
        for prefix, Dc, Q, sh, step in levels:
            al = step.selection.al
            ok &= len(step.copies) * (6 * h) ** (h + 2) >= len(Dc)
            ok &= len(al.indices) * (4 * h + 2) >= len(Dc)
            keep = set(al.indices)
            for k in al.indices:
                w = al.witness[k]
                ok &= w in Dc.copies[k].vertex_set and distinct_neighbor_count(Q, w, keep) <= 6 * h
            ok &= step.consistent and is_consistent(step.Q, step.copies, prefix + (step.vertex,))
            steps += 1
        ok &= run_pipeline_report(inst.G, inst.H, inst.eps, inst.seed).ok
    record(7, "next_level, AL, degree_prune and consistency bounds on 30 far instances", ok, f"{steps} level steps")


def test_criterion_08_shadow_soundness(corpus_chains):
    ok = True
    planar_checked = 0
    for inst, bc, D, levels in corpus_chains:
        for prefix, Dc, Q, sh, step in levels:
            q_pairs = frozenset(Q.adjacent_pairs())
            ok &= not sh.missing and sh.edges == q_pairs
            for u in Q.vertices:
                ok &= sh.neighbors(u) == frozenset(b if a == u else a for a, b in q_pairs if u in (a, b))
            for c in sh.per_color:
                ok &= c.euler_ok() and c.euler_margin >= 0
                if len(c.vertices) <= 10:
                    ok &= c.is_planar() is True
                    planar_checked += 1
    record(8, "shadow neighborhoods, Euler bound and small-shadow planarity", ok, f"{planar_checked} shadows checked for planarity")


# 9. hypergraph exploration equals graph exploration

def test_criterion_09_hypergraph_graph_equivalence():
    ok = True
    setups = [("triangle", 3, 2, 2, 2), ("paw", 3, 2, 2, 2), ("c4", 2, 1, 3, 2), ("diamond", 2, 3, 2, 3), ("path3", 4, 0, 2, 2),
              ("star3", 3, 2, 3, 2), ("k4", 2, 1, 2, 2), ("c5", 2, 2, 2, 3), ("path4", 3, 1, 3, 2), ("triangle", 5, 4, 3, 3)]
    for name, k, pad, dg, ld in setups:
        H = named_pattern(name)
        G, D = colored_copies(H, k, pad)
        GD = D.union_graph(G.n)
        Q1 = build_Q(D, ())
        M1 = pattern_at(H, ())
        ident = list(range(G.n + 1))
        for t in range(1000):
            a = hrlbd(Q1, ident, M1, dg, ld, QueryMeter(), make_rng(name, t))
            b = rlbd(GD, H, dg, ld, QueryMeter(), make_rng(name, t))
            ok &= a.reject == b.reject
    record(9, "hrlbd on Q_1 matches rlbd on G[D]", ok, f"{len(setups)} instances x 1000 trials")


# 10. last-level detection

def test_criterion_10_final_level_closed_form():
    ok = True
    details = []
    trials = 20_000
    for name, order, k, pad in [("triangle", (1, 2, 3), 3, 3), ("path3", (1, 3, 2), 2, 4), ("star3", (2, 3, 4, 1), 2, 5), ("c4", (1, 3, 2, 4), 3, 2), ("k2", (1, 2), 2, 6)]:
        H = named_pattern(name)
        h = H.n
        G, D = colored_copies(H, k, pad)
        prefix = order[:-1]
        Q = build_Q(D, prefix)
        M = pattern_at(H, prefix)
        P = representatives(D, order).P(h)
        s = sum(e.is_selfloop for e in M.edges)
        assert s == len(M.edges)
        exact = float(final_level_reject_probability(h, k, pad, s))
        rng = make_rng(10, name)
        rate = sum(hrlbd(Q, P, M, h * h, 1, QueryMeter(), rng, n=G.n).reject for _ in range(trials)) / trials
        ok &= within_sigmas(rate, exact, trials)
        details.append(f"{name}:{rate:.4f}/{exact:.4f}")
    record(10, "hrlbd(Q_h, P_h, M_h, h^2, 1) vs closed form", ok, " ".join(details))


# 11. oracle sensitivity

def test_criterion_11_sensitivity():
    trials = 10_000
    C = cycle(40)
    cyc_rejects = sum(connectivity_test_distinct(C, 0.25, make_rng(11, t)).reject for t in range(trials))
    M = matching(40)
    m_trials = 2_000
    m_rate = sum(connectivity_test_distinct(M, 0.25, make_rng(12, t)).reject for t in range(m_trials)) / m_trials
    ok = cyc_rejects == 0 and at_least(m_rate, 2 / 3, m_trials)
    freqs = []
    for q in range(1, 7):
        r = matching_indistinguishability(q, 100, trials, make_rng(13))
        ok &= r.frequency >= 2.0**-q - 4 * binomial_sigma(2.0**-q, trials)
        freqs.append(f"q={q}:{r.frequency:.4f}")
    record(11, "connectivity and matching sensitivity", ok, f"C_n rejects {cyc_rejects}, M_n rate {m_rate:.3f}, " + " ".join(freqs))


# 12. semi-subgraph-freeness audit

def test_criterion_12_audit():
    start = time.perf_counter()
    tri_free = lambda G: not contains_copy(G, TRI)  # noqa: E731
    ok = True
    for n in range(1, 7):
        for eps in (0.1, 0.2, 0.5):
            ok &= semi_subgraph_freeness_audit(tri_free, [TRI], n, eps, deletions_only=True).holds
    families = [["triangle"], ["k2"], ["path3"], ["c4"], ["2k2"], ["triangle", "c4"], ["k4", "star3"]]
    for names in families:
        fam = [named_pattern(x) for x in names]
        ok &= not semi_subgraph_freeness_audit(lambda G: G.is_connected(), fam, 6, 0.3).holds
    elapsed = time.perf_counter() - start
    record(12, "audit of triangle-freeness and connectivity", ok and elapsed < 120, f"{len(families)} families refuted, {elapsed:.1f}s")
