"""Rendering of results as rich tables (stderr) and key=value records (stdout)."""

from collections.abc import Mapping, Sequence

from rich.table import Table

from pachner.census import CensusRow, SphereClosure
from pachner.graph import HeightReport, LengthReport
from pachner.graph.bounds import (
    CONJECTURED_HEIGHT,
    CONJECTURED_LENGTH,
    conjecture_status,
    ratio_exponent,
)
from pachner.moves import TraceStep


def _join(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def census_table(rows: Sequence[CensusRow], spheres: Mapping[int, int]) -> Table:
    """Counts per size, with one-vertex sphere counts where a level file exists."""
    table = Table(title="Closed 3-manifold census")
    table.add_column("Size", style="bold", justify="right")
    table.add_column("All closed", justify="right")
    table.add_column("1-vertex", justify="right")
    table.add_column("1-vertex spheres", justify="right")
    for row in rows:
        sphere_count = spheres.get(row.size)
        table.add_row(
            str(row.size),
            str(row.closed),
            str(row.one_vertex),
            "-" if sphere_count is None else str(sphere_count),
        )
    return table


def census_records(rows: Sequence[CensusRow], spheres: Mapping[int, int]) -> list[str]:
    """:return:"""
    records = []
    for row in rows:
        line = f"size={row.size} closed={row.closed} one_vertex={row.one_vertex}"
        if row.size in spheres:
            line += f" spheres={spheres[row.size]}"
        records.append(line)
    return records


def closure_table(closure: SphereClosure) -> Table:
    """One-vertex 3-spheres found per level."""
    allowance = closure.height_allowance
    table = Table(title=f"One-vertex 3-spheres (height allowance {allowance})")
    table.add_column("Level", style="bold", justify="right")
    table.add_column("Spheres", justify="right")
    for n, count in closure.counts().items():
        table.add_row(str(n), str(count))
    return table


def closure_records(closure: SphereClosure) -> list[str]:
    """:return:"""
    return [f"level={n} count={count}" for n, count in closure.counts().items()]


def height_table(report: HeightReport) -> Table:
    """Component counts as the subgraph grows."""
    table = Table(title=f"Excess height, level {report.n}")
    if report.two_phase:
        table.add_column("Phase", style="bold", justify="right")
        labels = [str(i) for i in range(len(report.trace))]
    else:
        table.add_column("Level", style="bold", justify="right")
        labels = [str(report.n + i) for i in range(len(report.trace))]
    table.add_column("Components", justify="right")
    for label, count in zip(labels, report.trace, strict=True):
        table.add_row(label, str(count))
    table.caption = f"H = {report.bound}" if not report.inconclusive else "inconclusive"
    return table


def height_record(report: HeightReport) -> list[str]:
    """:return:"""
    return [
        f"level={report.n}",
        f"two_phase={str(report.two_phase).lower()}",
        f"trace={_join(report.trace)}",
        f"bound={'-' if report.bound is None else report.bound}",
        f"conjecture={conjecture_status(report.bound, CONJECTURED_HEIGHT)}",
        f"status={'inconclusive' if report.inconclusive else 'ok'}",
    ]


def length_table(report: LengthReport) -> Table:
    """Nodes left unreached after each round of jumps."""
    table = Table(title=f"Path length, level {report.n}")
    table.add_column("Jumps", style="bold", justify="right")
    table.add_column("Nodes remaining", justify="right")
    for rounds, count in enumerate(report.remaining):
        table.add_row(str(rounds), str(count))
    table.caption = (
        f"{report.interior} nodes with a 3-2 move; L = {report.bound}"
        if not report.inconclusive
        else f"{report.interior} nodes with a 3-2 move; inconclusive"
    )
    return table


def length_record(report: LengthReport) -> list[str]:
    """Records for a length report, with the known-bound ratio when conclusive."""
    records = [
        f"level={report.n}",
        f"interior={report.interior}",
        f"remaining={_join(report.remaining)}",
        f"rounds={'-' if report.rounds is None else report.rounds}",
        f"bound={'-' if report.bound is None else report.bound}",
    ]
    if report.bound is not None:
        ratio = ratio_exponent(report.n, report.bound)
        records.append(f"mijatovic_ratio_log10={ratio:.1f}")
    records.append(f"conjecture={conjecture_status(report.bound, CONJECTURED_LENGTH)}")
    records.append(f"status={'inconclusive' if report.inconclusive else 'ok'}")
    return records


def trace_table(trace: Sequence[TraceStep]) -> Table:
    """Moves applied by greedy simplification."""
    table = Table(title="Simplification")
    table.add_column("Step", style="bold", justify="right")
    table.add_column("Move")
    table.add_column("Size", justify="right")
    table.add_column("Signature")
    for i, step in enumerate(trace, start=1):
        table.add_row(str(i), step.kind, str(step.size), step.signature)
    return table


def trace_records(trace: Sequence[TraceStep]) -> list[str]:
    """:return:"""
    return [
        f"step={i} move={step.kind} size={step.size} signature={step.signature}"
        for i, step in enumerate(trace, start=1)
    ]
