"""Isomorphism signature commands."""

import sys
from pathlib import Path

import typer

from pachner.cli.common import console, domain_errors, echo_lines
from pachner.core import (
    Triangulation,
    format_gluing_table,
    homology_h1,
    parse_gluing_table,
    skeleton,
)
from pachner.isosig import decode, is_isomorphic, isosig

isosig_app = typer.Typer(name="isosig")


def _load(source: str) -> Triangulation:
    """A triangulation from a gluing-table file path or a signature."""
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:  # long signatures exceed the file name limit
        is_file = False
    if is_file:
        return parse_gluing_table(path.read_text())
    return decode(source)


@isosig_app.command("encode")
def encode(
    table: Path | None = typer.Argument(
        None, help="Gluing-table file (read from stdin if omitted)"
    ),
):
    """Print the isomorphism signature of a gluing table."""
    with domain_errors():
        text = table.read_text() if table is not None else sys.stdin.read()
        t = parse_gluing_table(text)
        typer.echo(isosig(t))


@isosig_app.command("decode")
def decode_signature(
    signature: str = typer.Argument(..., help="Isomorphism signature"),
):
    """Print the gluing table a signature encodes."""
    with domain_errors():
        t = decode(signature)
    typer.echo(format_gluing_table(t), nl=False)


@isosig_app.command("check")
def check(
    first: str = typer.Argument(..., help="Signature or gluing-table file"),
    second: str = typer.Argument(..., help="Signature or gluing-table file"),
):
    """Report whether two triangulations are isomorphic."""
    with domain_errors():
        same = is_isomorphic(_load(first), _load(second))
    if same:
        console.print("✅ Isomorphic")
    else:
        console.print("⚠️  Not isomorphic")
    typer.echo(f"isomorphic={str(same).lower()}")


@isosig_app.command("info")
def info(
    source: str = typer.Argument(..., help="Signature or gluing-table file"),
):
    """Print skeleton counts, orientability and first homology."""
    with domain_errors():
        t = _load(source)
        skel = skeleton(t)
        records = [
            f"size={t.n}",
            f"vertices={skel.V}",
            f"edges={skel.E}",
            f"faces={skel.F}",
            f"orientable={str(t.orientable).lower()}",
            f"closed_manifold={str(skel.is_closed_3manifold).lower()}",
        ]
        if skel.is_closed_3manifold:
            h1 = homology_h1(t)
            primary = h1.primary_factors()
            records.append(f"h1={h1}")
            torsion = ",".join(str(p) for p in primary) or "-"
            records.append(f"h1_torsion={torsion}")
        else:
            console.print("⚠️  Not a closed 3-manifold; homology skipped")
    echo_lines(records)
