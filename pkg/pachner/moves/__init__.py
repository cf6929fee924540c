"""Pachner moves: detection, application, neighbourhoods and simplification."""

from pachner.moves.base import (
    RESTRICTED_KINDS,
    MoveKind,
    MoveSite,
    PachnerMove,
    move_registry,
)
from pachner.moves.flip import ThreeTwoMove, TwoThreeMove
from pachner.moves.search import (
    TraceStep,
    apply_move,
    greedy_simplify,
    greedy_simplify_traced,
    jumps,
    list_moves,
    neighbors,
)
from pachner.moves.stellar import FourOneMove, OneFourMove

for _move in (TwoThreeMove(), ThreeTwoMove(), OneFourMove(), FourOneMove()):
    move_registry.register(_move)

__all__ = [
    "RESTRICTED_KINDS",
    "MoveKind",
    "MoveSite",
    "PachnerMove",
    "TraceStep",
    "apply_move",
    "greedy_simplify",
    "greedy_simplify_traced",
    "jumps",
    "list_moves",
    "move_registry",
    "neighbors",
]
