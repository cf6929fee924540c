"""The 2-3 and 3-2 moves.

2-3 at the face shared by tetrahedra ``t0`` and ``t1``: with ``x0 < x1 < x2``
the face vertices in ``t0`` and ``a0``/``a1`` the two apexes, new tetrahedron
``k`` has vertices ``(a0, a1, y, z)`` where ``y < z`` are the face vertices
other than ``xk``. Its face 1 inherits face ``xk`` of ``t0`` and its face 0
inherits the matching face of ``t1``.

3-2 at a degree-three edge ``PQ`` with ring vertices ``S0, S1, S2``: the two
new tetrahedra are ``(P, S0, S1, S2)`` then ``(Q, S0, S1, S2)``, glued along
face 0 by the identity.
"""

from pachner.core.perm import INDEX, PERMS
from pachner.core.skeleton import EDGES, skeleton
from pachner.core.triangulation import Triangulation
from pachner.errors import IllegalMove
from pachner.moves.base import MoveKind, MoveSite, PachnerMove
from pachner.moves.retriangulate import retriangulate

# Apex symbols, distinct from vertex labels 0..3.
_A0, _A1 = 4, 5


class TwoThreeMove(PachnerMove):
    """Replace two tetrahedra sharing a face by three around a new edge."""

    @property
    def kind(self) -> MoveKind:
        """:return:"""
        return MoveKind.TWO_THREE

    def candidates(self, t: Triangulation) -> list[MoveSite]:
        """One site per face joining two distinct tetrahedra."""
        sites = []
        for slot in range(4 * t.n):
            tet, f = divmod(slot, 4)
            other = t.adj[slot]
            if other != tet and slot < 4 * other + PERMS[t.glu[slot]][f]:
                sites.append(MoveSite(self.kind, tet, f))
        return sites

    def build(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """:return:"""
        t0, f0 = site.tet, site.sub
        t1, p = t.gluing(t0, f0)
        if t1 == t0:
            raise IllegalMove(f"{site}: the face joins a tetrahedron to itself")
        image = p.images
        x = [v for v in range(4) if v != f0]

        boundary = {}
        labels = []
        for k in range(3):
            y, z = (x[i] for i in range(3) if i != k)
            labels.append((_A0, _A1, y, z))
            boundary[(t0, x[k])] = (k, INDEX[(f0, x[k], y, z)])
            boundary[(t1, image[x[k]])] = (
                k,
                INDEX[(image[x[k]], image[f0], image[y], image[z])],
            )

        internal = []
        for k in range(3):
            for face in (2, 3):
                j = x.index(labels[k][face])
                across = list(labels[k])
                across[face] = x[k]
                perm = INDEX[tuple(labels[j].index(symbol) for symbol in across)]
                internal.append((k, face, j, perm))

        return retriangulate(t, (t0, t1), 3, boundary, internal)


def edge_ring(
    t: Triangulation, tet: int, edge: int
) -> list[tuple[int, tuple[int, ...]]]:
    """Walk once around an edge.

    Each step is ``(tetrahedron, rho)`` where ``rho[0], rho[1]`` are the edge
    ends, ``rho[2]`` lies on the face crossed next and ``rho[3]`` on the face
    crossed last. The walk stops on returning to its start.
    """
    u, v = EDGES[edge]
    w, z = (a for a in range(4) if a not in (u, v))
    start = (u, v, w, z)
    ring = []
    current, rho = tet, start
    while True:
        ring.append((current, rho))
        slot = 4 * current + rho[3]
        g = PERMS[t.glu[slot]]
        current = t.adj[slot]
        rho = (g[rho[0]], g[rho[1]], g[rho[3]], g[rho[2]])
        if (current, rho) == (tet, start) or len(ring) > 6 * t.n:
            return ring


class ThreeTwoMove(PachnerMove):
    """Replace three tetrahedra around a degree-three edge by two."""

    @property
    def kind(self) -> MoveKind:
        """:return:"""
        return MoveKind.THREE_TWO

    def candidates(self, t: Triangulation) -> list[MoveSite]:
        """One site per valid degree-three edge class."""
        skel = skeleton(t)
        return [
            MoveSite(self.kind, *members[0])
            for members, degree, valid in zip(
                skel.edge_classes, skel.edge_degrees, skel.edge_valid, strict=True
            )
            if degree == 3 and valid
        ]

    def build(self, t: Triangulation, site: MoveSite) -> Triangulation:
        """:return:"""
        ring = edge_ring(t, site.tet, site.sub)
        tets = [tet for tet, _ in ring]
        if len(ring) != 3 or len(set(tets)) != 3:
            raise IllegalMove(f"{site}: the edge is not in exactly three tetrahedra")

        boundary = {}
        for i, (tet, rho) in enumerate(ring):
            previous, following = 1 + (i - 1) % 3, 1 + (i + 1) % 3
            top = [0] * 4
            top[0], top[1 + i], top[previous], top[following] = (
                rho[0],
                rho[2],
                rho[3],
                rho[1],
            )
            bottom = [0] * 4
            bottom[0], bottom[1 + i], bottom[previous], bottom[following] = (
                rho[1],
                rho[2],
                rho[3],
                rho[0],
            )
            boundary[(tet, rho[1])] = (0, INDEX[tuple(top)])
            boundary[(tet, rho[0])] = (1, INDEX[tuple(bottom)])

        internal = [(0, 0, 1, 0), (1, 0, 0, 0)]
        return retriangulate(t, tets, 2, boundary, internal)
