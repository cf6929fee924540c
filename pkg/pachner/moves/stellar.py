"""The 1-4 and 4-1 moves.

1-4 cones tetrahedron ``t`` from a new interior vertex: new tetrahedron
``k`` carries the labels of ``t`` with label ``k`` moved to the new vertex,
inherits face ``k`` of ``t`` by the identity, and meets new tetrahedron ``j``
along its face ``j`` through the transposition ``(j k)``.

4-1 undoes this. It is legal only where the four tetrahedra around a vertex
match that pattern after relabelling.
"""

from pachner.core.perm import COMPOSE, IDENTITY, INVERSE, PERMS, transposition
from pachner.core.skeleton import skeleton
from pachner.core.triangulation import Triangulation
from pachner.errors import IllegalMove
from pachner.moves.base import MoveKind, MoveSite, PachnerMove
from pachner.moves.retriangulate import retriangulate


class OneFourMove(PachnerMove):
    """Subdivide one tetrahedron into four."""

    @property
    def kind(self) -> MoveKind:
        """:return:"""
        return MoveKind.ONE_FOUR

    def candidates(self, t: Triangulation) -> list[MoveSite]:
        """Every tetrahedron."""
        return [MoveSite(self.kind, tet) for tet in range(t.n)]

    def build(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """:return:"""
        if not 0 <= site.tet < t.n:
            raise IllegalMove(f"{site}: no such tetrahedron")
        boundary = {(site.tet, k): (k, IDENTITY) for k in range(4)}
        internal = [
            (k, j, j, transposition(j, k)) for k in range(4) for j in range(4) if j != k
        ]
        return retriangulate(t, (site.tet,), 4, boundary, internal)


class FourOneMove(PachnerMove):
    """Merge the four tetrahedra around a degree-four vertex into one."""

    @property
    def kind(self) -> MoveKind:
        """:return:"""
        return MoveKind.FOUR_ONE

    def candidates(self, t: Triangulation) -> list[MoveSite]:
        """Vertices with one corner in each of four distinct tetrahedra."""
        return [
            MoveSite(self.kind, *corners[0])
            for corners in skeleton(t).vertex_classes
            if len(corners) == 4 and len({tet for tet, _ in corners}) == 4
        ]

    def build(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """:return:"""
        tet0, v0 = site.tet, site.sub
        # frames[a] = (tetrahedron, permutation from the merged labels to its own)
        # for the tetrahedron whose copy of the removed vertex sits at merged label a.
        frames = {v0: (tet0, IDENTITY)}
        for f in range(4):
            if f != v0:
                slot = 4 * tet0 + f
                frames[f] = (t.adj[slot], COMPOSE[t.glu[slot]][transposition(v0, f)])

        tets = [frames[a][0] for a in range(4)]
        if len(set(tets)) != 4:
            raise IllegalMove(f"{site}: the vertex is not in exactly four tetrahedra")

        for a in range(4):
            tet_a, psi_a = frames[a]
            for b in range(4):
                if b == a:
                    continue
                tet_b, psi_b = frames[b]
                slot = 4 * tet_a + PERMS[psi_a][b]
                if t.adj[slot] != tet_b or (
                    COMPOSE[COMPOSE[INVERSE[psi_b]][t.glu[slot]]][psi_a]
                    != transposition(a, b)
                ):
                    raise IllegalMove(f"{site}: the vertex link is not a 1-4 cone")

        boundary = {
            (tet_a, PERMS[psi_a][a]): (0, psi_a) for a, (tet_a, psi_a) in frames.items()
        }
        return retriangulate(t, tets, 1, boundary, [])
