"""Main CLI application."""

from pathlib import Path

import typer

from pachner import FORMAT_VERSION, __version__

from .analysis import height, length, simplify
from .cache import cache_app
from .census import census, spheres
from .common import CliState, settings, setup_logging
from .isosig import isosig_app

app = typer.Typer(help="pachner - triangulations, Pachner moves and 3-sphere censuses")
app.add_typer(isosig_app, name="isosig", help="Encode, decode and compare signatures")
app.add_typer(cache_app, name="cache", help="Inspect and clear stored sphere levels")

app.command("census")(census)
app.command("spheres")(spheres)
app.command("simplify")(simplify)
app.command("height")(height)
app.command("length")(length)


def _version_callback(value: bool):
    if value:
        typer.echo(f"pachner {__version__} (signature format {FORMAT_VERSION})")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        callback=_version_callback,
        is_eager=True,
        help="Show version and signature format, then exit",
    ),
    verbose: int = typer.Option(
        0, "--verbose", "-v", count=True, help="More log output (repeat for debug)"
    ),
    quiet: bool = typer.Option(
        False, "--quiet", "-q", help="No log output or spinners"
    ),
    config: Path | None = typer.Option(
        None, "--config", "-c", help="YAML config file (default: ./pachner.yaml)"
    ),
):
    """Global options shared by every command."""
    ctx.obj = CliState(
        config_path=config,
        verbosity=min(verbose, 2) if verbose else None,
        quiet=True if quiet else None,
    )
    setup_logging(settings(ctx))


@app.command()
def version():
    """Show pachner version."""
    typer.echo(f"pachner version {__version__}")


if __name__ == "__main__":
    app()
