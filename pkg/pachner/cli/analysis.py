"""Simplification and Pachner-graph analysis commands."""

import asyncio
from pathlib import Path

import typer

from pachner.cli.common import console, domain_errors, echo_lines, settings, spinner
from pachner.cli.reports import (
    height_record,
    height_table,
    length_record,
    length_table,
    trace_records,
    trace_table,
)
from pachner.graph import height_bound, height_bound_two_phase, length_bound
from pachner.isosig import decode, isosig
from pachner.moves import greedy_simplify_traced
from pachner.parallel import WorkerPool
from pachner.store import LevelCache

JOBS_HELP = "Worker processes (default: config file, PACHNER_JOBS, or 1)"
SPHERES_HELP = "Directory of level files written by 'spheres' (default: configured)"


def simplify(
    ctx: typer.Context,
    signature: str = typer.Argument(..., help="Isomorphism signature to simplify"),
    max_rounds: int | None = typer.Option(
        None, "--max-rounds", min=0, help="Jump rounds tried when stuck (default: 64)"
    ),
):
    """Greedily reduce a triangulation; print the result and the moves taken."""
    config = settings(ctx, guards={"max_rounds": max_rounds})
    with domain_errors():
        t = decode(signature)
        with spinner(config) as progress:
            progress.add_task("Simplifying...", total=None)
            result, trace = greedy_simplify_traced(t, config.guards.max_rounds)

    if trace:
        console.print(trace_table(trace))
    console.print(f"✅ Size {t.n} reduced to size {result.n} in {len(trace)} steps")
    typer.echo(isosig(result))
    echo_lines(trace_records(trace))


def height(
    ctx: typer.Context,
    level: int = typer.Option(..., "--level", "-n", min=1, help="Level to analyse"),
    two_phase: bool = typer.Option(
        False, "--two-phase", help="Join level n+1 by 2-3/3-2 pairs, skip level n+2"
    ),
    max_height: int | None = typer.Option(
        None, "--max-height", min=0, help="Give up above this height (default: 8)"
    ),
    jobs: int | None = typer.Option(None, "--jobs", "-j", min=1, help=JOBS_HELP),
    spheres: Path | None = typer.Option(None, "--spheres", help=SPHERES_HELP),
):
    """Bound the excess height of simplification paths at a level."""
    config = settings(
        ctx, jobs=jobs, spheres_dir=spheres, guards={"max_height": max_height}
    )
    analyse = height_bound_two_phase if two_phase else height_bound

    with domain_errors():
        contents = asyncio.run(LevelCache(config.spheres_path).load_level(level))
        with WorkerPool(config.jobs) as pool, spinner(config) as progress:
            progress.add_task(f"Climbing from level {level}...", total=None)
            report = analyse(level, contents.signatures, config.guards.max_height, pool)

    console.print(height_table(report))
    echo_lines(height_record(report))
    if report.inconclusive:
        console.print(f"⚠️  No height bound established for level {level}")
        raise typer.Exit(1)
    console.print(f"✅ Excess height at level {level} is at most {report.bound}")


def length(
    ctx: typer.Context,
    level: int = typer.Option(..., "--level", "-n", min=1, help="Level to analyse"),
    max_rounds: int | None = typer.Option(
        None, "--max-rounds", min=0, help="Give up after this many rounds (default: 64)"
    ),
    jobs: int | None = typer.Option(None, "--jobs", "-j", min=1, help=JOBS_HELP),
    spheres: Path | None = typer.Option(None, "--spheres", help=SPHERES_HELP),
):
    """Bound the length of simplification paths at a level."""
    config = settings(
        ctx, jobs=jobs, spheres_dir=spheres, guards={"max_rounds": max_rounds}
    )

    with domain_errors():
        contents = asyncio.run(LevelCache(config.spheres_path).load_level(level))
        with WorkerPool(config.jobs) as pool, spinner(config) as progress:
            progress.add_task(f"Searching jumps at level {level}...", total=None)
            report = length_bound(
                level, contents.signatures, config.guards.max_rounds, pool
            )

    console.print(length_table(report))
    echo_lines(length_record(report))
    if report.inconclusive:
        console.print(f"⚠️  No length bound established for level {level}")
        raise typer.Exit(1)
    console.print(
        f"✅ Simplification paths at level {level} need at most {report.bound} moves"
    )
