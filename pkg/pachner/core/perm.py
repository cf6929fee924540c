"""Permutations of {0, 1, 2, 3} with a fixed published index order.

Index ``i`` names the ``i``-th permutation in lexicographic order of image
tuples, so index 0 is the identity and index 23 is ``(3, 2, 1, 0)``. All hot
paths work on raw indices through the lookup tables below; :class:`Perm4` is
the public value type wrapping an index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

Images = tuple[int, int, int, int]

PERMS: tuple[Images, ...] = tuple(permutations(range(4)))  # type: ignore[assignment]
INDEX: dict[tuple[int, ...], int] = {images: i for i, images in enumerate(PERMS)}

IDENTITY = 0

# COMPOSE[a][b] is the index of a o b, i.e. x -> PERMS[a][PERMS[b][x]].
COMPOSE: tuple[tuple[int, ...], ...] = tuple(
    tuple(INDEX[tuple(PERMS[a][PERMS[b][x]] for x in range(4))] for b in range(24))
    for a in range(24)
)
INVERSE: tuple[int, ...] = tuple(
    INDEX[tuple(PERMS[a].index(x) for x in range(4))] for a in range(24)
)


def _is_even(images: tuple[int, ...]) -> bool:
    inversions = sum(
        1 for i in range(4) for j in range(i + 1, 4) if images[i] > images[j]
    )
    return inversions % 2 == 0


EVEN: tuple[bool, ...] = tuple(_is_even(images) for images in PERMS)

# MAPPING[f][g] lists, in index order, the six permutations sending f to g.
MAPPING: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
    tuple(tuple(i for i in range(24) if PERMS[i][f] == g) for g in range(4))
    for f in range(4)
)


def transposition(a: int, b: int) -> int:
    """Index of the permutation swapping ``a`` and ``b``."""
    images = [0, 1, 2, 3]
    images[a], images[b] = images[b], images[a]
    return INDEX[tuple(images)]


@dataclass(frozen=True, slots=True, order=True)
class Perm4:
    """A permutation of the four vertex labels of a tetrahedron."""

    index: int

    def __post_init__(self) -> None:
        """Reject indices outside ``[0, 24)``."""
        if not 0 <= self.index < 24:
            raise ValueError(f"Perm4 index must lie in [0, 24), got {self.index}")

    @classmethod
    def identity(cls) -> Perm4:
        """The identity permutation (index 0)."""
        return cls(IDENTITY)

    @classmethod
    def from_images(cls, images: tuple[int, ...] | list[int]) -> Perm4:
        """Build from the image tuple ``(p(0), p(1), p(2), p(3))``."""
        try:
            return cls(INDEX[tuple(images)])
        except KeyError:
            raise ValueError(f"Not a permutation of 0..3: {images!r}") from None

    @property
    def images(self) -> tuple[int, int, int, int]:
        """Image tuple ``(p(0), p(1), p(2), p(3))``."""
        return PERMS[self.index]

    @property
    def is_even(self) -> bool:
        """Whether the permutation has sign +1."""
        return EVEN[self.index]

    def __call__(self, vertex: int) -> int:
        """Image of a single vertex label."""
        return PERMS[self.index][vertex]

    def __mul__(self, other: Perm4) -> Perm4:
        """Composition ``self o other`` (apply ``other`` first)."""
        return Perm4(COMPOSE[self.index][other.index])

    def inverse(self) -> Perm4:
        """The inverse permutation."""
        return Perm4(INVERSE[self.index])

    def __str__(self) -> str:
        """Image tuple written as four digits, e.g. ``1023``."""
        return "".join(str(x) for x in self.images)
