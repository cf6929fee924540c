"""One-vertex 3-spheres found by search in the restricted Pachner graph.

Level 1 holds a single one-vertex sphere and has no 2-3 or 3-2 moves, so the
search starts from a known two-tetrahedron sphere and explores levels
``2 .. max_level + height_allowance`` breadth first. Moves preserve the
manifold, so everything found is a 3-sphere.
"""

import logging
from dataclasses import dataclass, field
from functools import partial

from pachner.core.triangulation import canonical_sphere, layered_sphere
from pachner.isosig.signature import isosig, signature_size
from pachner.moves.base import MoveKind
from pachner.moves.search import neighbor_signatures
from pachner.parallel import WorkerPool

logger = logging.getLogger(__name__)

FLOOR = 2


@dataclass(frozen=True)
class SphereClosure:
    """One-vertex sphere signatures per level up to ``max_level``."""

    max_level: int
    height_allowance: int
    levels: dict[int, tuple[str, ...]] = field(default_factory=dict)

    def level(self, n: int) -> tuple[str, ...]:
        """Sorted signatures at level ``n``."""
        return self.levels.get(n, ())

    def counts(self) -> dict[int, int]:
        """Number of signatures per level."""
        return {n: len(sigs) for n, sigs in sorted(self.levels.items())}


def expand_sphere(sig: str, top: int) -> list[str]:
    """Restricted-graph neighbours of ``sig`` within levels ``FLOOR..top``."""
    n = signature_size(sig)
    kinds = []
    if n < top:
        kinds.append(MoveKind.TWO_THREE)
    if n > FLOOR:
        kinds.append(MoveKind.THREE_TWO)
    return neighbor_signatures(sig, tuple(kinds))


def sphere_closure(
    max_level: int, height_allowance: int, pool: WorkerPool | None = None
) -> SphereClosure:
    """Breadth-first closure of the one-vertex spheres up to ``max_level``.

    Args:
        max_level: Highest level reported.
        height_allowance: How far above ``max_level`` the search may climb.
        pool: Worker pool for frontier expansion.

    """
    if max_level < 1 or height_allowance < 0:
        raise ValueError("max_level must be >= 1 and height_allowance >= 0")

    found: dict[int, set[str]] = {1: {isosig(canonical_sphere(1))}}
    if max_level >= FLOOR:
        pool = pool or WorkerPool()
        top = max_level + height_allowance
        seed = isosig(layered_sphere())
        visited = {seed}
        frontier = [seed]
        rounds = 0
        while frontier:
            rounds += 1
            fresh = set()
            for targets in pool.map(partial(expand_sphere, top=top), frontier):
                fresh.update(s for s in targets if s not in visited)
            visited |= fresh
            frontier = sorted(fresh)
            logger.info(
                "Sphere search round %d: %d new, %d seen",
                rounds,
                len(frontier),
                len(visited),
            )
        for sig in visited:
            found.setdefault(signature_size(sig), set()).add(sig)

    return SphereClosure(
        max_level=max_level,
        height_allowance=height_allowance,
        levels={n: tuple(sorted(found.get(n, ()))) for n in range(1, max_level + 1)},
    )
