"""Canonical labellings of a triangulation.

A labelling is canonical when, reading the adjacent tetrahedra face by face
in row-major order, each new tetrahedron first appears after all smaller
ones and that first appearance is glued by the identity map. Choosing the
tetrahedron that becomes 0 and the labels of its four vertices forces the
rest, so there are exactly ``24 n`` canonical labellings.
"""

from __future__ import annotations

from dataclasses import dataclass

from pachner.core.perm import COMPOSE, INVERSE, PERMS, Perm4
from pachner.core.triangulation import Triangulation, relabel


@dataclass(frozen=True)
class CanonicalLabelling:
    """One canonical labelling.

    Attributes:
        start_tet: Tetrahedron that receives the new label 0.
        start_perm: New vertex labels of ``start_tet``.
        tet_order: ``tet_order[old]`` is the new label of tetrahedron ``old``.
        vertex_perms: ``vertex_perms[old]`` carries the old vertex labels of
            tetrahedron ``old`` to its new ones.

    """

    start_tet: int
    start_perm: Perm4
    tet_order: tuple[int, ...]
    vertex_perms: tuple[Perm4, ...]


def forced_labelling(
    t: Triangulation, start_tet: int, start_perm: Perm4
) -> CanonicalLabelling:
    """Extend a first tetrahedron and its vertex labels to a full labelling."""
    adj, glu = t.adj, t.glu
    new_of = [-1] * t.n
    sigma = [0] * t.n
    order = [start_tet]
    new_of[start_tet] = 0
    sigma[start_tet] = start_perm.index

    for tet in order:
        s = sigma[tet]
        old_face = PERMS[INVERSE[s]]
        for new_face in range(4):
            slot = 4 * tet + old_face[new_face]
            other = adj[slot]
            if new_of[other] < 0:
                new_of[other] = len(order)
                sigma[other] = COMPOSE[s][INVERSE[glu[slot]]]
                order.append(other)

    return CanonicalLabelling(
        start_tet=start_tet,
        start_perm=start_perm,
        tet_order=tuple(new_of),
        vertex_perms=tuple(Perm4(s) for s in sigma),
    )


def canonical_labellings(t: Triangulation) -> list[CanonicalLabelling]:
    """All ``24 n`` canonical labellings, by start tetrahedron then permutation."""
    return [
        forced_labelling(t, start, Perm4(index))
        for start in range(t.n)
        for index in range(24)
    ]


def apply_labelling(t: Triangulation, labelling: CanonicalLabelling) -> Triangulation:
    """The relabelled copy of ``t``."""
    return relabel(t, labelling.tet_order, labelling.vertex_perms)


def destination_sequence(t: Triangulation) -> list[int]:
    """Adjacent tetrahedra read face by face, tetrahedron by tetrahedron."""
    return list(t.adj)
