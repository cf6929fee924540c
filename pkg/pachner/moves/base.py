"""Pachner move interface and registry."""

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

from pachner.core.skeleton import is_closed_3manifold
from pachner.core.triangulation import Triangulation
from pachner.errors import IllegalMove

logger = logging.getLogger(__name__)


class MoveKind(str, Enum):
    """The four Pachner moves in three dimensions."""

    TWO_THREE = "2-3"  # face shared by two tetrahedra -> three around an edge
    THREE_TWO = "3-2"
    ONE_FOUR = "1-4"  # cone a tetrahedron from a new interior vertex
    FOUR_ONE = "4-1"

    @property
    def size_delta(self) -> int:
        """Change in the number of tetrahedra."""
        return {"2-3": 1, "3-2": -1, "1-4": 3, "4-1": -3}[self.value]

    @property
    def vertex_delta(self) -> int:
        """Change in the number of vertices."""
        return {"2-3": 0, "3-2": 0, "1-4": 1, "4-1": -1}[self.value]

    @property
    def inverse(self) -> "MoveKind":
        """The move that undoes this one."""
        a, b = self.value.split("-")
        return MoveKind(f"{b}-{a}")


RESTRICTED_KINDS = frozenset({MoveKind.TWO_THREE, MoveKind.THREE_TWO})


@dataclass(frozen=True, order=True)
class MoveSite:
    """Where a move is applied.

    ``tet`` and ``sub`` name the smallest representative of the locus: a face
    ``(tet, face)`` for 2-3, an edge ``(tet, edge index)`` for 3-2, the
    tetrahedron itself for 1-4 (``sub`` is 0) and a corner ``(tet, vertex)``
    for 4-1.
    """

    kind: MoveKind
    tet: int
    sub: int = 0

    def __str__(self) -> str:
        """Compact form such as ``2-3@(0,1)``."""
        return f"{self.kind.value}@({self.tet},{self.sub})"


class PachnerMove(ABC):
    """One kind of Pachner move."""

    @property
    @abstractmethod
    def kind(self) -> MoveKind:
        """The move kind this implementation handles."""
        pass

    @abstractmethod
    def candidates(self, t: Triangulation) -> list[MoveSite]:
        """Sites meeting the combinatorial precondition, in (tet, sub) order."""
        pass

    @abstractmethod
    def build(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """Retriangulate at ``site``.

        Raises:
            IllegalMove: The local configuration does not admit the move.

        """
        pass

    def apply(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """Apply the move and insist the result is a closed 3-manifold."""
        if site.kind is not self.kind:
            raise IllegalMove(f"{site} handed to the {self.kind.value} move")
        result = self.build(t, site)
        if not is_closed_3manifold(result):
            raise IllegalMove(f"{site} does not produce a closed 3-manifold")
        return result

    def legal_moves(self, t: Triangulation) -> Iterator[tuple[MoveSite, Triangulation]]:
        """Yield every legal site with its result."""
        for site in self.candidates(t):
            try:
                yield site, self.apply(t, site)
            except IllegalMove as e:
                logger.debug("Skipping %s: %s", site, e)


class MoveRegistry:
    """Registry of move implementations by kind."""

    def __init__(self):
        """Initialize an empty registry."""
        self._moves: dict[MoveKind, PachnerMove] = {}

    def register(self, move: PachnerMove) -> None:
        """Register a move implementation."""
        self._moves[move.kind] = move

    def get(self, kind: MoveKind | str) -> PachnerMove:
        """Implementation for ``kind``."""
        try:
            return self._moves[MoveKind(kind)]
        except (KeyError, ValueError):
            raise IllegalMove(f"No move registered for {kind}") from None

    def kinds(self) -> list[MoveKind]:
        """Registered kinds."""
        return list(self._moves)


# Global move registry instance
move_registry = MoveRegistry()
