"""Commands for the stored sphere levels."""

import asyncio
from pathlib import Path

import typer
from rich.table import Table

from pachner.cli.common import console, settings
from pachner.store import LevelCache

cache_app = typer.Typer(name="cache")

SPHERES_HELP = "Directory of level files (default: configured spheres directory)"


@cache_app.command("status")
def cache_status(
    ctx: typer.Context,
    spheres: Path | None = typer.Option(None, "--spheres", help=SPHERES_HELP),
):
    """Show the stored sphere levels."""
    config = settings(ctx, spheres_dir=spheres)

    async def _status():
        cache = LevelCache(config.spheres_path)
        cache_info = await cache.get_cache_info()

        if not cache_info:
            console.print(f"📦 No sphere levels stored in {cache.cache_dir}")
            return

        table = Table(title=f"Sphere levels in {cache.cache_dir}")
        table.add_column("Level", style="bold", justify="right")
        table.add_column("Status")
        table.add_column("Spheres", justify="right")
        table.add_column("Height", justify="right")
        table.add_column("Last Updated")
        table.add_column("Size (KB)", justify="right")

        for n, info in cache_info.items():
            if "error" in info:
                table.add_row(str(n), "❌ Corrupted", "-", "-", "-", "-")
            else:
                size_kb = round(info["file_size"] / 1024, 1)
                table.add_row(
                    str(n),
                    "✅ Stored",
                    str(info["count"]),
                    info["height"],
                    info["timestamp"],
                    f"{size_kb}KB",
                )

        console.print(table)

    asyncio.run(_status())


@cache_app.command("clear")
def clear_cache(
    ctx: typer.Context,
    level: int | None = typer.Argument(
        None, help="Level to delete (all if not specified)"
    ),
    spheres: Path | None = typer.Option(None, "--spheres", help=SPHERES_HELP),
):
    """Delete stored sphere levels."""
    config = settings(ctx, spheres_dir=spheres)

    async def _clear():
        cache = LevelCache(config.spheres_path)
        cleared = await cache.clear_cache(level)
        if level is not None and not cleared:
            console.print(f"⚠️  No level {level} stored")
        else:
            console.print(f"✅ Cleared [bold]{cleared}[/] level files")

    asyncio.run(_clear())
