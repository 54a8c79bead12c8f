"""End-to-end contraction pipeline run with bound checks, as a line report or CSV."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from planartest.core import Graph, make_rng
from planartest.errors import PreconditionViolated
from planartest.match.packing import best_coloring, certify_far
from planartest.pipeline import build_Q, degree_prune, next_level, representatives, shadow, stages_for
from planartest.pipeline.contract import ContractedHypergraph


def degree_sandwich_ok(Q_prev: ContractedHypergraph, Q_next: ContractedHypergraph, h: int) -> bool:
    """deg_{Q_{i+1}}(u) <= deg_{Q_i}(u) <= h deg_{Q_{i+1}}(u) for every u of Q_{i+1}."""
    return all(Q_next.degree(u) <= Q_prev.degree(u) <= h * Q_next.degree(u) for u in Q_next.vertices)


@dataclass(frozen=True)
class LevelReport:
    i: int
    vertex: int
    copies_in: int
    al_kept: int
    copies_out: int
    q_edges: int
    ratio_ok: bool
    al_ok: bool
    witness_ok: bool
    consistent: bool
    sandwich_ok: bool
    shadow_exact: bool
    euler_margin: int

    @property
    def ok(self) -> bool:
        return all(
            (self.ratio_ok, self.al_ok, self.witness_ok, self.consistent, self.sandwich_ok, self.shadow_exact)
        )


@dataclass(frozen=True)
class PipelineReport:
    n: int
    h: int
    eps: Fraction
    seed: int
    certified: bool
    packed: int
    colored: int
    pruned: int
    prune_ok: bool
    order: tuple[int, ...]
    levels: tuple[LevelReport, ...]
    representative_violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.prune_ok and all(lv.ok for lv in self.levels) and not self.representative_violations

    def lines(self) -> list[str]:
        out = [
            f"n={self.n} h={self.h} eps={self.eps} seed={self.seed} certified={self.certified}",
            f"packing={self.packed} colored={self.colored} pruned={self.pruned} prune_ok={self.prune_ok}",
        ]
        for lv in self.levels:
            out.append(
                f"level {lv.i}: v={lv.vertex} D={lv.copies_in} AL={lv.al_kept} next={lv.copies_out}"
                f" Q_edges={lv.q_edges} ratio_ok={lv.ratio_ok} al_ok={lv.al_ok} witness_ok={lv.witness_ok}"
                f" consistent={lv.consistent} sandwich_ok={lv.sandwich_ok} shadow_exact={lv.shadow_exact}"
                f" euler_margin={lv.euler_margin}"
            )
        out.append(f"order={','.join(map(str, self.order))}")
        out.append(f"representatives_ok={not self.representative_violations}")
        out.append(f"ok={self.ok}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = [f for f in LevelReport.__dataclass_fields__]
        w.writerow(cols)
        for lv in self.levels:
            w.writerow([getattr(lv, c) for c in cols])
        return buf.getvalue()


def run_pipeline_report(
    G: Graph, H: Graph, eps: float | Fraction, seed: int, force: bool = False
) -> PipelineReport:
    """best_coloring over a greedy packing, degree_prune, h-1 next_level steps, representatives.

    Without ``force`` the input must be certified far; each level records the
    size ratio, AL and witness bounds, consistency, degree sandwich, shadow
    exactness and the smallest per-color Euler margin.
    """
    cert = certify_far(G, H, eps)
    if not cert and not force:
        raise PreconditionViolated("input is not certified far; pass force to run anyway")
    h = H.n
    rng = make_rng(seed)
    bc = best_coloring(G, H, rng=rng)
    D = degree_prune(bc.copies, G)
    pruned = len(D)
    prune_ok = 2 * pruned >= len(bc.copies)
    if not len(D):
        raise PreconditionViolated("no colored copies survive pruning")
    prefix: tuple[int, ...] = ()
    Q = build_Q(D, prefix)
    levels = []
    for i in range(1, h):
        sh = shadow(Q, D, prefix)
        step = next_level(D, Q, prefix, rng, sh)
        al = step.selection.al
        Dn = step.copies
        witness_ok = all(
            k in al.witness and al.witness[k] in D.copies[k].vertex_set for k in al.indices
        )
        levels.append(
            LevelReport(
                i=i,
                vertex=step.vertex,
                copies_in=len(D),
                al_kept=len(al.indices),
                copies_out=len(Dn),
                q_edges=len(Q.edges),
                ratio_ok=len(Dn) * (6 * h) ** (h + 2) >= len(D),
                al_ok=len(al.indices) * (4 * h + 2) >= len(D),
                witness_ok=witness_ok,
                consistent=step.consistent,
                sandwich_ok=degree_sandwich_ok(build_Q(Dn, prefix), step.Q, h),
                shadow_exact=not sh.missing and sh.edges == frozenset(Q.adjacent_pairs()),
                euler_margin=min((c.euler_margin for c in sh.per_color), default=0),
            )
        )
        prefix = prefix + (step.vertex,)
        D, Q = Dn, step.Q
    order = prefix + tuple(c for c in range(1, h + 1) if c not in prefix)
    reps = representatives(D, order)
    viol = tuple(reps.violations(stages_for(D, order)))
    return PipelineReport(
        G.n, h, Fraction(eps).limit_denominator(10**9), seed, bool(cert), len(bc.packing), len(bc.copies),
        pruned, prune_ok, order, tuple(levels), viol,
    )
