"""Vertex, edge and face classes of a triangulation, with link data.

Classes are computed by union-find over tetrahedron sub-simplices. Edges are
tracked with an orientation bit so that an edge identified with itself in
reverse is detected. Vertex links are assembled from corner triangles: one
triangle per tetrahedron corner, whose vertices are the ends of the three
tetrahedron edges at that corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from pachner.core.perm import PERMS
from pachner.core.triangulation import Triangulation
from pachner.core.unionfind import ParityUnionFind

EDGES: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX: dict[tuple[int, int], int] = {edge: i for i, edge in enumerate(EDGES)}

# FACE_EDGES[f] lists (edge index, low, high) for the three edges of face f.
FACE_EDGES: tuple[tuple[tuple[int, int, int], ...], ...] = tuple(
    tuple((i, a, b) for i, (a, b) in enumerate(EDGES) if f not in (a, b))
    for f in range(4)
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class Skeleton:
    """Cell classes of a triangulation.

    Each class is a tuple of ``(tetrahedron, local index)`` pairs sorted
    ascending; classes are ordered by their smallest member. Edge local
    indices follow :data:`EDGES`.
    """

    n: int
    vertex_classes: tuple[tuple[Cell, ...], ...]
    edge_classes: tuple[tuple[Cell, ...], ...]
    face_classes: tuple[tuple[Cell, ...], ...]
    edge_degrees: tuple[int, ...]
    edge_valid: tuple[bool, ...]
    link_euler: tuple[int, ...]

    @property
    def V(self) -> int:  # noqa: N802
        """Number of vertex classes."""
        return len(self.vertex_classes)

    @property
    def E(self) -> int:  # noqa: N802
        """Number of edge classes."""
        return len(self.edge_classes)

    @property
    def F(self) -> int:  # noqa: N802
        """Number of face classes."""
        return len(self.face_classes)

    @property
    def euler_characteristic(self) -> int:
        """``V - E + F - n``."""
        return self.V - self.E + self.F - self.n

    @property
    def min_edge_degree(self) -> int:
        """Smallest edge degree."""
        return min(self.edge_degrees)

    @cached_property
    def is_closed_3manifold(self) -> bool:
        """Every edge valid and every vertex link a 2-sphere."""
        return all(self.edge_valid) and all(chi == 2 for chi in self.link_euler)


def skeleton(t: Triangulation) -> Skeleton:
    """Compute the skeleton of ``t``."""
    n = t.n
    adj, glu = t.adj, t.glu

    vertices = ParityUnionFind(4 * n)
    edges = ParityUnionFind(6 * n)
    ends = ParityUnionFind(16 * n)
    reversed_edges: list[int] = []

    for slot in range(4 * n):
        tet, f = divmod(slot, 4)
        other = adj[slot]
        image = PERMS[glu[slot]]
        for v in range(4):
            if v == f:
                continue
            vertices.union(4 * tet + v, 4 * other + image[v])
            for w in range(4):
                if w != f and w != v:
                    ends.union(
                        16 * tet + 4 * v + w, 16 * other + 4 * image[v] + image[w]
                    )
        for e, a, b in FACE_EDGES[f]:
            ia, ib = image[a], image[b]
            target = EDGE_INDEX[(ia, ib) if ia < ib else (ib, ia)]
            if not edges.union(6 * tet + e, 6 * other + target, int(ia > ib)):
                reversed_edges.append(6 * tet + e)

    vertex_classes = tuple(
        tuple(divmod(x, 4) for x in members) for members in vertices.classes()
    )
    edge_members = edges.classes()
    edge_classes = tuple(
        tuple(divmod(x, 6) for x in members) for members in edge_members
    )

    bad_roots = {edges.find(x)[0] for x in reversed_edges}
    edge_valid = tuple(
        edges.find(members[0])[0] not in bad_roots for members in edge_members
    )

    face_classes = []
    for slot in range(4 * n):
        partner = 4 * adj[slot] + PERMS[glu[slot]][slot % 4]
        if slot < partner:
            face_classes.append((divmod(slot, 4), divmod(partner, 4)))

    link_euler = []
    for corners in vertex_classes:
        link_vertices = {
            ends.find(16 * tet + 4 * v + w)[0]
            for tet, v in corners
            for w in range(4)
            if w != v
        }
        # V - E + F with E = 3|C|/2 and F = |C|
        link_euler.append(len(link_vertices) - len(corners) // 2)

    return Skeleton(
        n=n,
        vertex_classes=vertex_classes,
        edge_classes=edge_classes,
        face_classes=tuple(face_classes),
        edge_degrees=tuple(len(members) for members in edge_classes),
        edge_valid=edge_valid,
        link_euler=tuple(link_euler),
    )


def is_closed_3manifold(t: Triangulation) -> bool:
    """Whether ``t`` is a closed 3-manifold triangulation."""
    return skeleton(t).is_closed_3manifold
