"""Closed 3-manifold triangulation gluing tables.

A triangulation of size ``n`` stores, for every face ``f`` of every
tetrahedron ``t``, the adjacent tetrahedron and the permutation carrying the
vertex labels of ``t`` to those of the adjacent tetrahedron. Face ``f`` is
the face opposite vertex ``f``. Tables are stored flat, indexed by
``4 * t + f``, with permutations kept as :mod:`pachner.core.perm` indices.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from pachner.core.perm import COMPOSE, EVEN, INVERSE, PERMS, Images, Perm4
from pachner.core.unionfind import ParityUnionFind
from pachner.errors import (
    Disconnected,
    InvolutionViolation,
    NotClosed,
    TriangulationError,
    UnsupportedSize,
)

GluingEntry = tuple[tuple[int, int], tuple[int, "Perm4 | int"]]


def _validate(n: int, adj: tuple[int, ...], glu: tuple[int, ...]) -> None:
    if n < 1:
        raise UnsupportedSize(
            f"A triangulation needs at least one tetrahedron, got {n}"
        )
    if len(adj) != 4 * n or len(glu) != 4 * n:
        raise NotClosed(f"Expected {4 * n} face entries, got {len(adj)}")

    for slot in range(4 * n):
        t, f = divmod(slot, 4)
        other, perm = adj[slot], glu[slot]
        if not 0 <= other < n:
            raise NotClosed(f"Face ({t}, {f}) is glued to missing tetrahedron {other}")
        if not 0 <= perm < 24:
            raise InvolutionViolation(f"Face ({t}, {f}) has bad permutation {perm}")
        partner = 4 * other + PERMS[perm][f]
        if partner == slot:
            raise InvolutionViolation(f"Face ({t}, {f}) is glued to itself")
        if adj[partner] != t or glu[partner] != INVERSE[perm]:
            raise InvolutionViolation(
                f"Face ({t}, {f}) -> ({other}, {PERMS[perm][f]}) is not mirrored"
            )

    seen = {0}
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for other in adj[4 * t : 4 * t + 4]:
            if other not in seen:
                seen.add(other)
                queue.append(other)
    if len(seen) != n:
        raise Disconnected(f"Only {len(seen)} of {n} tetrahedra are connected")


@dataclass(frozen=True)
class Triangulation:
    """A validated, immutable closed triangulation.

    Attributes:
        n: Number of tetrahedra.
        adj: ``adj[4 * t + f]`` is the tetrahedron glued to face ``f`` of ``t``.
        glu: ``glu[4 * t + f]`` is the :class:`Perm4` index of that gluing.

    """

    n: int
    adj: tuple[int, ...]
    glu: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the involution and connectedness of the table."""
        _validate(self.n, self.adj, self.glu)

    def adjacent(self, t: int, f: int) -> int:
        """Tetrahedron glued to face ``f`` of ``t``."""
        return self.adj[4 * t + f]

    def gluing(self, t: int, f: int) -> tuple[int, Perm4]:
        """``(adjacent tetrahedron, permutation)`` for face ``f`` of ``t``."""
        slot = 4 * t + f
        return self.adj[slot], Perm4(self.glu[slot])

    def entries(self) -> list[GluingEntry]:
        """Gluing entries in row-major order, as :func:`build_triangulation` takes."""
        return [
            ((t, f), (self.adj[4 * t + f], Perm4(self.glu[4 * t + f])))
            for t in range(self.n)
            for f in range(4)
        ]

    @cached_property
    def orientable(self) -> bool:
        """Whether the tetrahedra admit consistent orientations.

        Two tetrahedra glued by an odd permutation keep their label
        orientations compatible; an even one forces a flip.
        """
        uf = ParityUnionFind(self.n)
        for slot in range(4 * self.n):
            if not uf.union(slot // 4, self.adj[slot], int(EVEN[self.glu[slot]])):
                return False
        return True


def from_arrays(adj: Sequence[int], glu: Sequence[int]) -> Triangulation:
    """Build a triangulation from flat ``adj``/``glu`` arrays."""
    return Triangulation(len(adj) // 4, tuple(adj), tuple(glu))


def build_triangulation(entries: Iterable[GluingEntry]) -> Triangulation:
    """Assemble and validate a triangulation from ``((t, f), (t', perm))`` entries.

    The size is one more than the largest tetrahedron index mentioned. Every
    one of the ``4n`` faces must appear exactly once.

    Raises:
        NotClosed: A face has no entry.
        InvolutionViolation: Mutual gluings disagree or an entry is repeated.
        Disconnected: The tetrahedra fall into several pieces.

    """
    table: dict[int, tuple[int, int]] = {}
    n = 0
    for (t, f), (other, perm) in entries:
        if t < 0 or other < 0 or not 0 <= f < 4:
            raise TriangulationError(
                f"Bad gluing entry ({t}, {f}) -> ({other}, {perm})"
            )
        index = perm.index if isinstance(perm, Perm4) else int(perm)
        slot = 4 * t + f
        if slot in table and table[slot] != (other, index):
            raise InvolutionViolation(f"Face ({t}, {f}) is glued twice")
        table[slot] = (other, index)
        n = max(n, t + 1, other + 1)

    if n == 0:
        raise NotClosed("No gluings given")
    missing = [divmod(slot, 4) for slot in range(4 * n) if slot not in table]
    if missing:
        raise NotClosed(f"Faces without a gluing: {missing}")

    return Triangulation(
        n,
        tuple(table[slot][0] for slot in range(4 * n)),
        tuple(table[slot][1] for slot in range(4 * n)),
    )


def relabel(
    t: Triangulation, tet_order: Sequence[int], vertex_perms: Sequence[Perm4]
) -> Triangulation:
    """Return the isomorphic copy of ``t`` under a relabelling.

    Args:
        t: The triangulation to relabel.
        tet_order: ``tet_order[old]`` is the new index of tetrahedron ``old``.
        vertex_perms: ``vertex_perms[old]`` carries the old vertex labels of
            tetrahedron ``old`` to its new labels.

    """
    n = t.n
    if sorted(tet_order) != list(range(n)) or len(vertex_perms) != n:
        raise TriangulationError("Relabelling must be a permutation of the tetrahedra")

    sigma = [p.index for p in vertex_perms]
    adj = [0] * (4 * n)
    glu = [0] * (4 * n)
    for old in range(n):
        for f in range(4):
            slot = 4 * old + f
            other = t.adj[slot]
            new_slot = 4 * tet_order[old] + PERMS[sigma[old]][f]
            adj[new_slot] = tet_order[other]
            glu[new_slot] = COMPOSE[COMPOSE[sigma[other]][t.glu[slot]]][
                INVERSE[sigma[old]]
            ]
    return Triangulation(n, tuple(adj), tuple(glu))


def _table(rows: Sequence[Sequence[tuple[int, Images]]]) -> Triangulation:
    return build_triangulation(
        ((t, f), (other, Perm4.from_images(images)))
        for t, row in enumerate(rows)
        for f, (other, images) in enumerate(row)
    )


def canonical_sphere(n: int) -> Triangulation:
    """Standard small triangulations of the 3-sphere.

    ``n = 1`` gives the one-vertex sphere with two folded face pairs; ``n = 2``
    gives two tetrahedra glued along all four faces by the identity, the
    boundary of a 4-simplex collapsed to two cells.

    Raises:
        UnsupportedSize: ``n`` is not 1 or 2.

    """
    if n == 1:
        return _table(
            [
                [
                    (0, (1, 0, 2, 3)),
                    (0, (1, 0, 2, 3)),
                    (0, (1, 2, 3, 0)),
                    (0, (3, 0, 1, 2)),
                ]
            ]
        )
    if n == 2:
        identity = (0, 1, 2, 3)
        return _table([[(1, identity)] * 4, [(0, identity)] * 4])
    raise UnsupportedSize(f"canonical_sphere is defined for n = 1 or 2, got {n}")


def layered_sphere() -> Triangulation:
    """A two-tetrahedron one-vertex 3-sphere, the entry point to level 2."""
    return _table(
        [
            [
                (1, (2, 0, 1, 3)),
                (1, (1, 3, 2, 0)),
                (0, (1, 2, 3, 0)),
                (0, (3, 0, 1, 2)),
            ],
            [
                (1, (1, 0, 2, 3)),
                (1, (1, 0, 2, 3)),
                (0, (1, 2, 0, 3)),
                (0, (3, 0, 2, 1)),
            ],
        ]
    )


def parse_gluing_table(text: str) -> Triangulation:
    """Parse the plain-text gluing table format.

    The first data line holds ``n``; each following line holds
    ``t f t' perm-index``. Anything after ``#`` is a comment.
    """
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise TriangulationError(
                f"Line {lineno}: expected integers, got {raw!r}"
            ) from None

    if not rows or len(rows[0]) != 1:
        raise TriangulationError(
            "Gluing table must start with the number of tetrahedra"
        )
    n = rows[0][0]
    body = rows[1:]
    if any(len(row) != 4 for row in body):
        raise TriangulationError("Gluing lines must have four fields: t f t' perm")
    t = build_triangulation(((a, b), (c, d)) for a, b, c, d in body)
    if t.n != n or len(body) != 4 * n:
        raise NotClosed(f"Header says {n} tetrahedra but the table describes {t.n}")
    return t


def format_gluing_table(t: Triangulation) -> str:
    """Render ``t`` in the format read by :func:`parse_gluing_table`."""
    lines = [str(t.n)]
    for slot in range(4 * t.n):
        tet, face = divmod(slot, 4)
        lines.append(f"{tet} {face} {t.adj[slot]} {t.glu[slot]}")
    return "\n".join(lines) + "\n"
