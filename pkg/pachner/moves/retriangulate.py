"""Replace a set of tetrahedra by a new complex with the same boundary.

Surviving tetrahedra keep their relative order and are compacted to the
lowest indices; the new tetrahedra are appended after them.
"""

from collections.abc import Iterable, Mapping, Sequence

from pachner.core.perm import COMPOSE, INVERSE, PERMS
from pachner.core.triangulation import Triangulation, from_arrays
from pachner.errors import IllegalMove, TriangulationError

# (old tetrahedron, old face) -> (new tetrahedron, permutation new labels -> old labels)
Boundary = Mapping[tuple[int, int], tuple[int, int]]
# (new tetrahedron, face, new tetrahedron, permutation)
InternalGluing = tuple[int, int, int, int]


def retriangulate(
    t: Triangulation,
    removed: Sequence[int],
    new_count: int,
    boundary: Boundary,
    internal: Iterable[InternalGluing],
) -> Triangulation:
    """Swap the tetrahedra ``removed`` for ``new_count`` new ones.

    Args:
        t: Triangulation to modify.
        removed: Tetrahedra taken out.
        new_count: Number of tetrahedra put in.
        boundary: For every face of a removed tetrahedron on the outside of
            the removed region, the new tetrahedron inheriting it and the
            permutation from that tetrahedron's labels to the old ones.
        internal: Gluings among the new tetrahedra, both directions listed.

    Raises:
        IllegalMove: The description leaves a face unglued or inconsistent.

    """
    gone = set(removed)
    survivors = [tet for tet in range(t.n) if tet not in gone]
    new_of = {tet: i for i, tet in enumerate(survivors)}
    base = len(survivors)
    size = base + new_count
    adj = [-1] * (4 * size)
    glu = [0] * (4 * size)

    try:
        for tet in survivors:
            for f in range(4):
                slot = 4 * tet + f
                other, q = t.adj[slot], t.glu[slot]
                target = 4 * new_of[tet] + f
                if other in new_of:
                    adj[target], glu[target] = new_of[other], q
                else:
                    k, psi = boundary[(other, PERMS[q][f])]
                    adj[target], glu[target] = base + k, COMPOSE[INVERSE[psi]][q]

        for (tet, f), (k, psi) in boundary.items():
            target = 4 * (base + k) + PERMS[INVERSE[psi]][f]
            slot = 4 * tet + f
            other, q = t.adj[slot], t.glu[slot]
            if other in new_of:
                adj[target], glu[target] = new_of[other], COMPOSE[q][psi]
            else:
                k2, psi2 = boundary[(other, PERMS[q][f])]
                adj[target] = base + k2
                glu[target] = COMPOSE[COMPOSE[INVERSE[psi2]][q]][psi]
    except KeyError as e:
        raise IllegalMove(
            f"Face {e.args[0]} lies inside the region but was not replaced"
        ) from None

    for k, face, k2, perm in internal:
        target = 4 * (base + k) + face
        adj[target], glu[target] = base + k2, perm

    if -1 in adj:
        raise IllegalMove("Replacement complex leaves faces unglued")
    try:
        return from_arrays(adj, glu)
    except TriangulationError as e:
        raise IllegalMove(f"Replacement is inconsistent: {e}") from e
