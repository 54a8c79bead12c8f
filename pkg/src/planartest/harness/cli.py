"""Command line entry point.

Exit codes: 0 accept or success, 3 reject, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Sequence

import click

from planartest.core import Graph, make_rng
from planartest.errors import InvalidSpec, PlanarTestError
from planartest.instances import gen_instance, named_pattern, parse_instance_spec, read_edge_list, write_edge_list
from planartest.match.packing import as_fraction, best_coloring, exact_deletion_distance, greedy_packing
from planartest.pipeline import shrink_pattern
from planartest.testers import (
    TesterParams,
    connectivity_test_distinct,
    family_test,
    matching_indistinguishability,
)
from planartest.harness.experiments import ExperimentConfig, emit_plot_script, parse_grid, rows_to_csv, run_detection_experiment
from planartest.harness.report import run_pipeline_report

EXIT_ACCEPT = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_REJECT = 3


def _load_graph(graph: str | None, instance: str | None, seed: int = 0) -> Graph:
    if (graph is None) == (instance is None):
        raise click.UsageError("give exactly one of --graph or --instance")
    if graph is not None:
        return read_edge_list(Path(graph).read_text())
    return gen_instance(parse_instance_spec(instance), rng=make_rng(seed))  # type: ignore[arg-type]


def _load_patterns(names: Sequence[str], files: Sequence[str]) -> list[Graph]:
    out = [named_pattern(n) for n in names] + [read_edge_list(Path(f).read_text()) for f in files]
    if not out:
        raise click.UsageError("give at least one --h or --h-file")
    return out


def _params(dg: int | None, ld: int | None, f: int | None) -> TesterParams | None:
    given = [x is not None for x in (dg, ld, f)]
    if any(given) and not all(given):
        raise click.UsageError("--dg, --ld and --f must be given together")
    return TesterParams(f=f, ld=ld, dg=dg) if all(given) else None  # type: ignore[arg-type]


def _eps(value: float) -> float:
    if not 0 < as_fraction(value) < 1:
        raise click.UsageError("--eps must lie in (0, 1)")
    return value


graph_opt = click.option("--graph", type=click.Path(exists=True, dir_okay=False), help="Edge-list file.")
instance_opt = click.option("--instance", help="Instance spec such as grid:5x6 or copies:triangle:4:2.")
h_opt = click.option("--h", "h_names", multiple=True, help="Pattern name; repeat for a family.")
hfile_opt = click.option("--h-file", "h_files", multiple=True, type=click.Path(exists=True, dir_okay=False))
seed_opt = click.option("--seed", type=int, default=0, show_default=True)


@click.group()
def cli() -> None:
    """Query-model testers for subgraph freeness on planar graphs."""


@cli.command()
@click.option("--instance", required=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
@click.option("--shuffle", is_flag=True, help="Relabel vertices at random.")
@seed_opt
def gen(instance: str, out: str | None, shuffle: bool, seed: int) -> int:
    """Generate an instance as an edge list."""
    spec = parse_instance_spec(instance)
    if shuffle:
        from dataclasses import replace

        spec = replace(spec, shuffle=True)
    text = write_edge_list(gen_instance(spec, rng=make_rng(seed)))
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    return EXIT_ACCEPT


@cli.command()
@graph_opt
@instance_opt
@h_opt
@hfile_opt
@click.option("--eps", type=float, required=True)
@click.option("--dg", type=int)
@click.option("--ld", type=int)
@click.option("--f", type=int)
@seed_opt
def test(graph, instance, h_names, h_files, eps, dg, ld, f, seed) -> int:
    """Run the tester (a family test when several patterns are given)."""
    G = _load_graph(graph, instance, seed)
    family = _load_patterns(h_names, h_files)
    v = family_test(G, family, _eps(eps), _params(dg, ld, f), make_rng(seed))
    click.echo(f"verdict: {v.decision.value}")
    click.echo(f"queries: {v.queries.total}")
    if v.reject:
        if v.witness is not None:
            click.echo(f"witness: {' '.join(map(str, v.witness.vertex_map))}")
        for j, w in enumerate(v.component_witnesses, start=1):
            click.echo(f"component {j}: {' '.join(map(str, w.vertex_map)) if w else '-'}")
        if v.overlap:
            click.echo("components overlap")
        return EXIT_REJECT
    return EXIT_ACCEPT


@cli.command()
@graph_opt
@instance_opt
@h_opt
@click.option("--colored", is_flag=True, help="Keep only copies colored by the best sampled coloring.")
@seed_opt
def pack(graph, instance, h_names, colored, seed) -> int:
    """Print a greedy edge-disjoint packing of copies."""
    G = _load_graph(graph, instance, seed)
    (H,) = _load_patterns(h_names[:1], ())
    D = best_coloring(G, H, rng=make_rng(seed)).copies if colored else greedy_packing(G, H)
    click.echo(f"copies: {len(D)}")
    for c in D:
        click.echo(" ".join(map(str, c.vertex_map)))
    return EXIT_ACCEPT


@cli.command()
@graph_opt
@instance_opt
@h_opt
def distance(graph, instance, h_names) -> int:
    """Print the exact number of edge deletions needed to remove every copy."""
    G = _load_graph(graph, instance)
    (H,) = _load_patterns(h_names[:1], ())
    click.echo(str(exact_deletion_distance(G, H)))
    return EXIT_ACCEPT


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


@cli.command()
@h_opt
@hfile_opt
@click.option("--order", required=True, help="Comma-separated vertex order, e.g. 1,2,3.")
def shrink(h_names, h_files, order) -> int:
    """Dump M_1..M_h for a vertex order."""
    (H,) = _load_patterns(h_names[:1], h_files[:1])
    try:
        o = tuple(int(x) for x in order.split(","))
    except ValueError:
        raise click.UsageError("--order must be comma-separated integers") from None
    for M in shrink_pattern(H, o):
        click.echo(f"M_{M.i}: vertices {_fmt_set(M.vertices)}")
        for e in M.edges:
            kind = "selfloop" if e.is_selfloop else "edge"
            click.echo(f"  {kind} {e.id} on {_fmt_set(e.vertices)} label {_fmt_set(e.label)}")
    return EXIT_ACCEPT


@cli.command()
@graph_opt
@instance_opt
@h_opt
@click.option("--eps", type=float, required=True)
@click.option("--force", is_flag=True, help="Run even when farness is not certified.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Also write per-level CSV.")
@seed_opt
def pipeline(graph, instance, h_names, eps, force, csv_path, seed) -> int:
    """Run the contraction pipeline and print its report."""
    G = _load_graph(graph, instance, seed)
    (H,) = _load_patterns(h_names[:1], ())
    r = run_pipeline_report(G, H, _eps(eps), seed, force=force)
    click.echo(r.text(), nl=False)
    if csv_path:
        Path(csv_path).write_text(r.csv_text())
    return EXIT_ACCEPT if r.ok else EXIT_ERROR


@cli.command()
@click.option("--instance", required=True)
@click.option("--h", "h_name", required=True)
@click.option("--eps", type=float, required=True)
@click.option("--grid", "grid", multiple=True, required=True, help="dg,ld,f; repeat for more cells.")
@click.option("--trials", type=int, default=10_000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="CSV path (stdout when omitted).")
@click.option("--timing", is_flag=True, help="Record wall_ms (makes the CSV nondeterministic).")
@click.option("--emit-plot-script", "plot", type=click.Path(dir_okay=False))
@seed_opt
def experiment(instance, h_name, eps, grid, trials, out, timing, plot, seed) -> int:
    """Seeded detection experiment over a parameter grid."""
    try:
        cells = parse_grid(grid)
        cfg = ExperimentConfig(instance, h_name, _eps(eps), cells, trials, seed, Path(out) if out else None, timing)
    except InvalidSpec as e:
        raise click.UsageError(str(e)) from None
    rows = run_detection_experiment(cfg)
    if not out:
        click.echo(rows_to_csv(rows), nl=False)
    if plot:
        emit_plot_script(out or "experiment.csv", plot)
    return EXIT_ACCEPT


@cli.group()
def sensitivity() -> None:
    """Oracle-sensitivity experiments."""


@sensitivity.command()
@click.option("--instance", required=True)
@click.option("--eps", type=float, default=0.25, show_default=True)
@click.option("--trials", type=int, default=10_000, show_default=True)
@seed_opt
def connectivity(instance, eps, trials, seed) -> int:
    """Reject rate of the distinct-neighbor connectivity tester."""
    G = _load_graph(None, instance, seed)
    rejects = sum(connectivity_test_distinct(G, _eps(eps), make_rng(seed, t)).reject for t in range(trials))
    click.echo(f"trials={trials} rejects={rejects} rate={rejects / trials:.6f}")
    return EXIT_ACCEPT


@sensitivity.command("matching")
@click.option("--q", type=int, required=True)
@click.option("--n", type=int, default=100, show_default=True)
@click.option("--trials", type=int, default=10_000, show_default=True)
@seed_opt
def matching_cmd(q, n, trials, seed) -> int:
    """How often a q-query walk on C_n is consistent with a perfect matching."""
    try:
        r = matching_indistinguishability(q, n, trials, make_rng(seed))
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    click.echo(
        f"q={q} n={n} trials={trials} frequency={r.frequency:.6f} bound={r.bound:.6f}"
        f" sigma={r.sigma:.6f} ok={r.ok}"
    )
    return EXIT_ACCEPT


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="planartest", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except InvalidSpec as e:
        click.echo(f"usage error: {e}", err=True)
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_ERROR
    except (PlanarTestError, OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_ACCEPT


def run() -> None:
    sys.exit(main())
