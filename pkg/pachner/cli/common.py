"""Shared CLI plumbing: consoles, logging, configuration and error reporting."""

import logging
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn

from pachner import FORMAT_VERSION, __version__
from pachner.config import RunConfig, load_config
from pachner.errors import ConfigError, PachnerError

# status lines, tables and logs; data goes to stdout via typer.echo
console = Console(stderr=True)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@dataclass
class CliState:
    """Options given before the subcommand."""

    config_path: Path | None = None
    # None when the flag was not given, so the config file can decide
    verbosity: int | None = None
    quiet: bool | None = None


def setup_logging(config: RunConfig) -> None:
    """Route library logging through rich on stderr."""
    level = logging.CRITICAL + 1 if config.quiet else LOG_LEVELS[config.verbosity]
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def settings(ctx: typer.Context, **overrides: Any) -> RunConfig:
    """Load the run configuration, with command flags as overrides.

    Invalid configuration is a usage error.
    """
    state = ctx.obj if isinstance(ctx.obj, CliState) else CliState()
    base: dict[str, Any] = {"verbosity": state.verbosity, "quiet": state.quiet}
    # a flag given on its own also overrides the opposite setting from the file
    if state.quiet and state.verbosity is None:
        base["verbosity"] = 0
    if state.verbosity and state.quiet is None:
        base["quiet"] = False
    try:
        return load_config(state.config_path, {**base, **overrides})
    except ConfigError as e:
        raise typer.BadParameter(str(e)) from e


@contextmanager
def domain_errors() -> Iterator[None]:
    """Turn domain and file errors into a message and exit status 1."""
    try:
        yield
    except (PachnerError, OSError) as e:
        console.print(f"❌ [red]{escape(str(e))}[/]")
        raise typer.Exit(1) from e


def spinner(config: RunConfig) -> Progress:
    """Transient stderr spinner, hidden in quiet mode."""
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
        disable=config.quiet,
    )


def file_header(kind: str, **fields: object) -> dict[str, str]:
    """Header lines recorded at the top of every signature file we write."""
    header = {
        "generator": f"pachner {__version__}",
        "format": FORMAT_VERSION,
        "kind": kind,
    }
    for key, value in fields.items():
        header[key] = str(value).lower() if isinstance(value, bool) else str(value)
    return header


def echo_lines(lines: Iterable[str]) -> None:
    """Write data lines to stdout."""
    for line in lines:
        typer.echo(line)
