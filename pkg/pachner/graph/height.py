"""Excess-height bound for a level of the restricted Pachner graph of the 3-sphere.

Starting from every node at level ``n``, 2-3 arcs are added one level at a
time until the subgraph built so far is connected. Because level ``n`` is
then joined up through levels at most ``n + h``, every node there has a
simplification path of excess height at most ``h``.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import partial

from pachner.errors import EmptyLevel
from pachner.graph.level import LevelGraph
from pachner.isosig.signature import decode
from pachner.moves.base import MoveKind
from pachner.moves.search import neighbor_signatures, neighbors
from pachner.parallel import WorkerPool

logger = logging.getLogger(__name__)

_decode = partial(decode, canonical=False)

DEFAULT_MAX_HEIGHT = 8


@dataclass(frozen=True)
class HeightReport:
    """Outcome of an excess-height run.

    Attributes:
        n: Base level.
        trace: Component counts, one entry per level climbed (or per phase
            for the two-phase variant), starting at level ``n``.
        bound: The height bound, or None when the run gave up.
        two_phase: Whether the two-phase variant produced the report.

    """

    n: int
    trace: tuple[int, ...]
    bound: int | None
    two_phase: bool = False

    @property
    def inconclusive(self) -> bool:
        """Whether no bound was established."""
        return self.bound is None


def _seed(n: int, level_nodes: Iterable[str]) -> LevelGraph:
    graph = LevelGraph(n, level_nodes)
    if not len(graph):
        raise EmptyLevel(f"Level {n} has no nodes to analyse")
    logger.info("Level %d: %d nodes", n, len(graph))
    return graph


def _climb(graph: LevelGraph, pool: WorkerPool) -> None:
    """Add every 2-3 arc out of the current top level."""
    level = graph.ell
    sources = graph.nodes_at(level)
    expand = partial(neighbor_signatures, kinds=(MoveKind.TWO_THREE,))
    for source, targets in zip(sources, pool.map(expand, sources), strict=True):
        for target in targets:
            graph.add_node(target, level + 1)
            graph.add_arc(source, target)
    graph.ell = level + 1
    logger.info(
        "Level %d: %d nodes in the subgraph, %d components",
        graph.ell,
        len(graph),
        graph.components,
    )


def height_bound(
    n: int,
    level_nodes: Iterable[str],
    max_height: int = DEFAULT_MAX_HEIGHT,
    pool: WorkerPool | None = None,
) -> HeightReport:
    """Climb from level ``n`` until the subgraph is connected.

    Args:
        n: Base level.
        level_nodes: Every one-vertex sphere signature at level ``n``.
        max_height: Give up rather than climb above ``n + max_height``.
        pool: Worker pool for arc construction.

    Raises:
        EmptyLevel: ``level_nodes`` is empty.

    """
    graph = _seed(n, level_nodes)
    pool = pool or WorkerPool()
    trace = [graph.components]
    while graph.components > 1:
        if graph.ell + 1 - n > max_height:
            logger.warning(
                "Stopping at level %d with %d components", graph.ell, graph.components
            )
            return HeightReport(n, tuple(trace), None)
        _climb(graph, pool)
        trace.append(graph.components)
    return HeightReport(n, tuple(trace), graph.ell - n)


def up_down_endpoints(sig: str) -> list[str]:
    """Nodes reached from ``sig`` by a 2-3 move then a 3-2 move, ``sig`` excluded."""
    found: set[str] = set()
    for upper in sorted(neighbors(_decode(sig), (MoveKind.TWO_THREE,))):
        found |= neighbors(_decode(upper), (MoveKind.THREE_TWO,))
    found.discard(sig)
    return sorted(found)


def height_bound_two_phase(
    n: int,
    level_nodes: Iterable[str],
    max_height: int = DEFAULT_MAX_HEIGHT,
    pool: WorkerPool | None = None,
) -> HeightReport:
    """Excess-height bound without storing level ``n + 2``.

    Phase one climbs to level ``n + 1``. Phase two joins each level ``n + 1``
    node to the level ``n + 1`` nodes already present that it reaches by a
    2-3 move followed by a 3-2 move. Heights above 2 cannot be certified.

    Raises:
        EmptyLevel: ``level_nodes`` is empty.

    """
    graph = _seed(n, level_nodes)
    pool = pool or WorkerPool()
    trace = [graph.components]
    if graph.components == 1:
        return HeightReport(n, tuple(trace), 0, two_phase=True)
    if max_height < 1:
        return HeightReport(n, tuple(trace), None, two_phase=True)

    _climb(graph, pool)
    trace.append(graph.components)
    if graph.components == 1:
        return HeightReport(n, tuple(trace), 1, two_phase=True)
    if max_height < 2:
        return HeightReport(n, tuple(trace), None, two_phase=True)

    sources = graph.nodes_at(n + 1)
    endpoints = pool.map(up_down_endpoints, sources)
    for source, targets in zip(sources, endpoints, strict=True):
        for target in targets:
            if target in graph:
                graph.add_arc(source, target)
    trace.append(graph.components)
    logger.info("Second phase leaves %d components", graph.components)
    bound = 2 if graph.components == 1 else None
    return HeightReport(n, tuple(trace), bound, two_phase=True)
