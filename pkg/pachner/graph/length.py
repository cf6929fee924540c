"""Path-length bound for a level of the restricted Pachner graph of the 3-sphere.

Nodes with a 3-2 move already have a simplification path of length 1. Every
other node is reached from them by breadth-first rounds of jumps (two 2-3
moves then two 3-2 moves); if ``j`` rounds cover the level, every node has a
simplification path of length at most ``4 j + 1``.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import partial

from pachner.errors import EmptyLevel
from pachner.moves.base import MoveKind
from pachner.moves.search import has_move, jump_signatures
from pachner.parallel import WorkerPool

logger = logging.getLogger(__name__)

DEFAULT_MAX_ROUNDS = 64


@dataclass(frozen=True)
class LengthReport:
    """Outcome of a path-length run.

    Attributes:
        n: Level analysed.
        interior: Number of nodes admitting a 3-2 move.
        remaining: Nodes not yet reached after 0, 1, 2, ... rounds.
        rounds: Rounds needed to reach every node, or None.
        bound: ``4 * rounds + 1``, or None when the run gave up.

    """

    n: int
    interior: int
    remaining: tuple[int, ...]
    rounds: int | None
    bound: int | None

    @property
    def inconclusive(self) -> bool:
        """Whether no bound was established."""
        return self.bound is None


def length_bound(
    n: int,
    level_nodes: Iterable[str],
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    pool: WorkerPool | None = None,
) -> LengthReport:
    """Breadth-first jump search across level ``n``.

    Raises:
        EmptyLevel: ``level_nodes`` is empty.

    """
    level = sorted(set(level_nodes))
    if not level:
        raise EmptyLevel(f"Level {n} has no nodes to analyse")
    members = set(level)
    pool = pool or WorkerPool()

    flags = pool.map(partial(has_move, kind=MoveKind.THREE_TWO), level)
    frontier = [sig for sig, flag in zip(level, flags, strict=True) if flag]
    interior = len(frontier)
    reached = set(frontier)
    remaining = [len(level) - len(reached)]
    logger.info("Level %d: %d nodes, %d with a 3-2 move", n, len(level), interior)

    rounds = 0
    while remaining[-1]:
        if rounds >= max_rounds or not frontier:
            logger.warning(
                "Stopping after %d rounds, %d unreached", rounds, remaining[-1]
            )
            return LengthReport(n, interior, tuple(remaining), None, None)
        rounds += 1
        fresh: set[str] = set()
        for targets in pool.map(jump_signatures, frontier):
            fresh.update(s for s in targets if s in members and s not in reached)
        reached |= fresh
        frontier = sorted(fresh)
        remaining.append(len(level) - len(reached))
        logger.info("Round %d: %d nodes remain", rounds, remaining[-1])

    return LengthReport(n, interior, tuple(remaining), rounds, 4 * rounds + 1)
