"""First homology of closed triangulations via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import Matrix, factorint
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from pachner.core.perm import PERMS
from pachner.core.skeleton import EDGE_INDEX, Skeleton, skeleton
from pachner.core.triangulation import Triangulation
from pachner.core.unionfind import ParityUnionFind
from pachner.errors import NotAManifold


@dataclass(frozen=True)
class HomologyProfile:
    """Invariant factors of H1, torsion first in divisibility order, then zeros.

    An empty tuple is the trivial group; each ``0`` is a free summand.
    """

    h1_invariant_factors: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        """Whether H1 is the trivial group."""
        return not self.h1_invariant_factors

    @property
    def rank(self) -> int:
        """Rank of the free part."""
        return self.h1_invariant_factors.count(0)

    def primary_factors(self) -> list[int]:
        """Torsion split into prime powers, ascending (e.g. Z/6 -> [2, 3])."""
        powers = []
        for factor in self.h1_invariant_factors:
            if factor:
                powers.extend(p**k for p, k in factorint(factor).items())
        return sorted(powers)

    def __str__(self) -> str:
        """Human form such as ``Z/2 + Z`` or ``0``."""
        if self.is_trivial:
            return "0"
        factors = self.h1_invariant_factors
        return " + ".join("Z" if k == 0 else f"Z/{k}" for k in factors)


def _edge_orientation(
    t: Triangulation, skel: Skeleton
) -> tuple[dict[int, int], list[int]]:
    """Map each tetrahedron edge ``6t + e`` to (class index, sign)."""
    uf = ParityUnionFind(6 * t.n)
    for slot in range(4 * t.n):
        tet, f = divmod(slot, 4)
        image = PERMS[t.glu[slot]]
        for (a, b), e in EDGE_INDEX.items():
            if f in (a, b):
                continue
            ia, ib = image[a], image[b]
            target = EDGE_INDEX[(ia, ib) if ia < ib else (ib, ia)]
            uf.union(6 * tet + e, 6 * t.adj[slot] + target, int(ia > ib))

    class_of = {}
    for index, members in enumerate(skel.edge_classes):
        for tet, e in members:
            class_of[6 * tet + e] = index
    sign = [1 - 2 * uf.find(x)[1] for x in range(6 * t.n)]
    return class_of, sign


def boundary_matrix(t: Triangulation, skel: Skeleton | None = None) -> Matrix:
    """Integer matrix of the face-to-edge boundary map (rows = edge classes)."""
    skel = skel or skeleton(t)
    class_of, sign = _edge_orientation(t, skel)
    matrix = [[0] * skel.F for _ in range(skel.E)]
    for column, ((tet, f), _partner) in enumerate(skel.face_classes):
        a, b, c = (v for v in range(4) if v != f)
        for (x, y), coefficient in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            edge = 6 * tet + EDGE_INDEX[(x, y)]
            matrix[class_of[edge]][column] += coefficient * sign[edge]
    return Matrix(matrix)


def homology_h1(t: Triangulation) -> HomologyProfile:
    """First homology group of a closed 3-manifold triangulation.

    Raises:
        NotAManifold: ``t`` is not a closed 3-manifold triangulation.

    """
    skel = skeleton(t)
    if not skel.is_closed_3manifold:
        raise NotAManifold(
            "Homology is only computed for closed 3-manifold triangulations"
        )

    cycles = skel.E - (skel.V - 1)
    boundary = boundary_matrix(t, skel)
    diagonal = [abs(int(d)) for d in invariant_factors(boundary, domain=ZZ)]
    rank = sum(1 for d in diagonal if d)
    torsion = sorted(d for d in diagonal if d > 1)
    return HomologyProfile(tuple(torsion) + (0,) * (cycles - rank))
