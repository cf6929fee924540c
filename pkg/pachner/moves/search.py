"""Move listing, neighbourhoods, jumps and greedy simplification."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import partial

from pachner.core.triangulation import Triangulation
from pachner.isosig.signature import decode, isosig
from pachner.moves.base import RESTRICTED_KINDS, MoveKind, MoveSite, move_registry

logger = logging.getLogger(__name__)

# for signatures produced by this package
_decode = partial(decode, canonical=False)

JUMP_SEQUENCE = (
    MoveKind.TWO_THREE,
    MoveKind.TWO_THREE,
    MoveKind.THREE_TWO,
    MoveKind.THREE_TWO,
)


@dataclass(frozen=True)
class TraceStep:
    """One step of a simplification: the move kind (or ``jump``) and where it led."""

    kind: str
    size: int
    signature: str


def list_moves(t: Triangulation, kind: MoveKind | str) -> list[MoveSite]:
    """All legal sites of ``kind`` in (tet, sub) order."""
    return [site for site, _ in move_registry.get(kind).legal_moves(t)]


def apply_move(t: Triangulation, site: MoveSite) -> Triangulation:
    """Apply the move at ``site``.

    Raises:
        IllegalMove: ``site`` is not legal for ``t``.

    """
    return move_registry.get(site.kind).apply(t, site)


def neighbors(
    t: Triangulation, kinds: Iterable[MoveKind | str] = RESTRICTED_KINDS
) -> set[str]:
    """Signatures of everything one legal move of the given kinds away."""
    found = set()
    for kind in kinds:
        for _, result in move_registry.get(kind).legal_moves(t):
            found.add(isosig(result))
    return found


def neighbor_signatures(sig: str, kinds: tuple[MoveKind, ...]) -> list[str]:
    """Sorted :func:`neighbors` of a signature (worker-pool entry point)."""
    return sorted(neighbors(_decode(sig), kinds))


def jumps(t: Triangulation) -> set[str]:
    """Signatures reachable by two 2-3 moves followed by two 3-2 moves.

    Intermediate stages are deduplicated up to isomorphism.
    """
    stage = {isosig(t)}
    for kind in JUMP_SEQUENCE:
        stage = {
            target
            for sig in sorted(stage)
            for target in neighbors(_decode(sig), (kind,))
        }
    return stage


def jump_signatures(sig: str) -> list[str]:
    """Sorted :func:`jumps` of a signature (worker-pool entry point)."""
    return sorted(jumps(_decode(sig)))


def has_move(sig: str, kind: MoveKind) -> bool:
    """Whether the triangulation with signature ``sig`` admits a legal ``kind`` move."""
    return next(move_registry.get(kind).legal_moves(_decode(sig)), None) is not None


def _first_reduction(t: Triangulation) -> tuple[MoveKind, Triangulation] | None:
    for kind in (MoveKind.THREE_TWO, MoveKind.FOUR_ONE):
        for _, result in move_registry.get(kind).legal_moves(t):
            return kind, result
    return None


def _jump_to_reducible(t: Triangulation, max_rounds: int) -> Triangulation | None:
    """Breadth-first jump search for a same-size triangulation admitting a 3-2 move."""
    start = isosig(t)
    visited = {start}
    frontier = [start]
    for round_no in range(1, max_rounds + 1):
        reached = set()
        for sig in frontier:
            reached.update(s for s in jumps(_decode(sig)) if s not in visited)
        if not reached:
            return None
        visited |= reached
        frontier = sorted(reached)
        logger.debug(
            "Jump round %d at size %d reached %d new", round_no, t.n, len(frontier)
        )
        for sig in frontier:
            if has_move(sig, MoveKind.THREE_TWO):
                return _decode(sig)
    return None


def greedy_simplify_traced(
    t: Triangulation, max_rounds: int = 64
) -> tuple[Triangulation, list[TraceStep]]:
    """Greedy simplification returning the result and the steps taken.

    Applies the first legal 3-2 move, else the first legal 4-1 move; when
    neither exists, searches up to ``max_rounds`` rounds of jumps for a
    triangulation of the same size that admits a 3-2 move.
    """
    current = t
    trace: list[TraceStep] = []
    while True:
        step = _first_reduction(current)
        if step is not None:
            kind, current = step
            trace.append(TraceStep(kind.value, current.n, isosig(current)))
            continue
        target = _jump_to_reducible(current, max_rounds)
        if target is None:
            break
        current = target
        trace.append(TraceStep("jump", current.n, isosig(current)))

    logger.info("Simplified size %d to size %d in %d steps", t.n, current.n, len(trace))
    return current, trace


def greedy_simplify(t: Triangulation, max_rounds: int = 64) -> Triangulation:
    """Greedily reduce ``t``; returns ``t`` itself when nothing reduces it."""
    return greedy_simplify_traced(t, max_rounds)[0]
