"""Census and sphere-closure commands."""

import asyncio
from pathlib import Path

import typer

from pachner.census import (
    CensusSpec,
    SphereClosure,
    census_counts,
    enumerate_closed,
    sphere_closure,
)
from pachner.cli.common import (
    console,
    domain_errors,
    echo_lines,
    file_header,
    settings,
    spinner,
)
from pachner.cli.reports import (
    census_records,
    census_table,
    closure_records,
    closure_table,
)
from pachner.config import RunConfig
from pachner.parallel import WorkerPool
from pachner.store import LevelCache, write_signatures

JOBS_HELP = "Worker processes (default: config file, PACHNER_JOBS, or 1)"


def _cached_sphere_counts(config: RunConfig) -> dict[int, int]:
    cache = LevelCache(config.spheres_path)

    async def _counts() -> dict[int, int]:
        info = await cache.get_cache_info()
        return {n: entry["count"] for n, entry in info.items() if "count" in entry}

    return asyncio.run(_counts())


def census(
    ctx: typer.Context,
    size: int = typer.Option(..., "--size", "-n", min=1, help="Number of tetrahedra"),
    one_vertex: bool = typer.Option(
        False, "--one-vertex", help="Keep only one-vertex triangulations"
    ),
    jobs: int | None = typer.Option(None, "--jobs", "-j", min=1, help=JOBS_HELP),
    output: Path | None = typer.Option(
        None, "--output", "-o", help="Write the sorted signatures to this file"
    ),
    table: bool = typer.Option(
        False, "--table", help="Print counts for every size from 1 to --size instead"
    ),
    allow_above_ceiling: bool = typer.Option(
        False, "--allow-above-ceiling", help="Run sizes above the census ceiling"
    ),
):
    """Enumerate closed 3-manifold triangulations and print how many there are."""
    if table and (one_vertex or output is not None):
        raise typer.BadParameter(
            "--table cannot be combined with --one-vertex or --output"
        )
    config = settings(
        ctx, jobs=jobs, guards={"allow_above_ceiling": allow_above_ceiling or None}
    )
    guards = config.guards

    with domain_errors(), WorkerPool(config.jobs) as pool:
        if table:
            with spinner(config) as progress:
                progress.add_task(f"Counting sizes 1..{size}...", total=None)
                rows = census_counts(
                    size,
                    pool,
                    ceiling=guards.census_ceiling,
                    allow_above_ceiling=guards.allow_above_ceiling,
                )
            spheres = _cached_sphere_counts(config)
            console.print(census_table(rows, spheres))
            echo_lines(census_records(rows, spheres))
            return

        spec = CensusSpec(
            size,
            one_vertex_only=one_vertex,
            output=output,
            ceiling=guards.census_ceiling,
            allow_above_ceiling=guards.allow_above_ceiling,
        )
        with spinner(config) as progress:
            progress.add_task(f"Enumerating size {size}...", total=None)
            signatures = enumerate_closed(spec, pool)

        if spec.output is not None:
            header = file_header(
                "census", size=size, one_vertex=one_vertex, count=len(signatures)
            )
            asyncio.run(write_signatures(spec.output, signatures, header))
            saved = spec.output.absolute()
            console.print(f"✅ Census saved to: [bold green]{saved}[/]")

    typer.echo(len(signatures))


async def _store_closure(cache: LevelCache, closure: SphereClosure) -> None:
    for n, signatures in closure.levels.items():
        header = file_header(
            "spheres",
            level=n,
            height=closure.height_allowance,
            max_level=closure.max_level,
            count=len(signatures),
        )
        await cache.store_level(n, signatures, header)


def spheres(
    ctx: typer.Context,
    max_level: int = typer.Option(
        ..., "--max-level", "-n", min=1, help="Highest level stored"
    ),
    height: int | None = typer.Option(
        None, "--height", min=0, help="Height allowance above --max-level (default: 2)"
    ),
    jobs: int | None = typer.Option(None, "--jobs", "-j", min=1, help=JOBS_HELP),
    output: Path | None = typer.Option(
        None,
        "--output",
        "-o",
        help="Directory for level files (default: configured spheres directory)",
    ),
):
    """Find all one-vertex 3-spheres up to a level and store one file per level."""
    config = settings(ctx, jobs=jobs, sphere_height=height, spheres_dir=output)
    cache = LevelCache(config.spheres_path)

    with domain_errors(), WorkerPool(config.jobs) as pool:
        with spinner(config) as progress:
            progress.add_task(f"Searching levels 1..{max_level}...", total=None)
            closure = sphere_closure(max_level, config.sphere_height, pool)
        asyncio.run(_store_closure(cache, closure))

    console.print(closure_table(closure))
    console.print(f"✅ Levels saved to: [bold green]{cache.cache_dir.absolute()}[/]")
    echo_lines(closure_records(closure))
