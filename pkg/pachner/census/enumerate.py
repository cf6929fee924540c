"""Isomorph-free census of closed 3-manifold triangulations.

Gluing tables are grown face by face: the first unglued face is glued either
to a later unglued face of a tetrahedron already in use, or to the same face
of the next unused tetrahedron by the identity. Every table built this way
is canonically labelled, so each isomorphism class is met at most ``24 n``
times; signatures remove the repeats.

Partial tables are pruned when an edge becomes identified with itself in
reverse, when a vertex link becomes non-orientable, or when the tetrahedra
in use close up before all ``n`` are used.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import factorial, prod
from pathlib import Path

from pachner.core.perm import EVEN, IDENTITY, INVERSE, MAPPING, PERMS
from pachner.core.skeleton import EDGE_INDEX, FACE_EDGES, skeleton
from pachner.core.triangulation import from_arrays
from pachner.core.unionfind import ParityUnionFind
from pachner.errors import SizeAboveCeiling
from pachner.isosig.signature import decode, isosig
from pachner.parallel import WorkerPool

logger = logging.getLogger(__name__)

DEFAULT_CEILING = 6


@dataclass(frozen=True)
class CensusSpec:
    """What to enumerate.

    Attributes:
        size: Number of tetrahedra.
        one_vertex_only: Keep only one-vertex triangulations.
        output: Where the caller intends to write the census, if anywhere.
        ceiling: Largest size enumerated without ``allow_above_ceiling``.
        allow_above_ceiling: Permit sizes above ``ceiling``.

    """

    size: int
    one_vertex_only: bool = False
    output: Path | None = None
    ceiling: int = DEFAULT_CEILING
    allow_above_ceiling: bool = False

    def __post_init__(self) -> None:
        """Reject sizes below one."""
        if self.size < 1:
            raise ValueError(f"Census size must be at least 1, got {self.size}")


@dataclass(frozen=True)
class CensusRow:
    """Census counts for one size."""

    size: int
    closed: int
    one_vertex: int


class _CensusSearch:
    """Backtracking state for one census run."""

    def __init__(self, n: int, one_vertex_only: bool):
        self.n = n
        self.one_vertex_only = one_vertex_only
        self.adj = [-1] * (4 * n)
        self.glu = [0] * (4 * n)
        self.used = 1
        self.free = 4
        self.edges = ParityUnionFind(6 * n)
        self.corners = ParityUnionFind(4 * n)
        self.found: set[str] = set()

    def options(self, slot: int) -> list[tuple[int, int]]:
        """``(partner slot, permutation)`` choices for gluing ``slot``."""
        f = slot % 4
        choices = []
        for partner in range(slot + 1, 4 * self.used):
            if self.adj[partner] < 0:
                choices.extend((partner, p) for p in MAPPING[f][partner % 4])
        if self.used < self.n:
            choices.append((4 * self.used + f, IDENTITY))
        return choices

    def glue(self, slot: int, partner: int, p: int, introduces: bool) -> bool:
        """Record a gluing; False if it makes the table hopeless."""
        tet, f = divmod(slot, 4)
        other = partner // 4
        if introduces:
            self.used += 1
            self.free += 2
        else:
            self.free -= 2
        self.adj[slot], self.glu[slot] = other, p
        self.adj[partner], self.glu[partner] = tet, INVERSE[p]

        if self.free == 0 and self.used < self.n:
            return False
        image = PERMS[p]
        flip = int(EVEN[p])
        for v in range(4):
            if v == f:
                continue
            if not self.corners.union(4 * tet + v, 4 * other + image[v], flip):
                return False
        for e, a, b in FACE_EDGES[f]:
            ia, ib = image[a], image[b]
            target = EDGE_INDEX[(ia, ib) if ia < ib else (ib, ia)]
            if not self.edges.union(6 * tet + e, 6 * other + target, int(ia > ib)):
                return False
        return True

    def step(self, slot: int, partner: int, p: int) -> None:
        """Glue, recurse if still viable, then undo."""
        marks = (self.edges.mark(), self.corners.mark())
        introduces = partner // 4 == self.used
        if self.glue(slot, partner, p, introduces):
            self.search()

        if introduces:
            self.used -= 1
            self.free -= 2
        else:
            self.free += 2
        self.adj[slot] = self.adj[partner] = -1
        self.edges.rollback(marks[0])
        self.corners.rollback(marks[1])

    def search(self) -> None:
        """Extend the current partial table in every viable way."""
        slot = next((s for s in range(4 * self.used) if self.adj[s] < 0), None)
        if slot is None:
            self.leaf()
            return
        for partner, p in self.options(slot):
            self.step(slot, partner, p)

    def leaf(self) -> None:
        """Keep a complete table that is a closed 3-manifold."""
        vertices = self.corners.components
        if vertices - self.edges.components + self.n != 0:
            return
        if self.one_vertex_only and vertices != 1:
            return
        self.found.add(isosig(from_arrays(self.adj, self.glu)))


def shard_count(n: int) -> int:
    """Number of independent subtrees the search is split into."""
    return len(_CensusSearch(n, False).options(0))


def enumerate_shard(n: int, one_vertex_only: bool, shard: int) -> list[str]:
    """Signatures found under the ``shard``-th choice for the first face."""
    search = _CensusSearch(n, one_vertex_only)
    partner, p = search.options(0)[shard]
    search.step(0, partner, p)
    return sorted(search.found)


def enumerate_closed(spec: CensusSpec, pool: WorkerPool | None = None) -> list[str]:
    """Sorted signatures of all closed 3-manifold triangulations of ``spec.size``.

    Raises:
        SizeAboveCeiling: ``spec.size`` exceeds the ceiling without override.

    """
    if spec.size > spec.ceiling and not spec.allow_above_ceiling:
        raise SizeAboveCeiling(
            f"Census size {spec.size} is above the ceiling {spec.ceiling}; "
            "pass the override to run it anyway"
        )
    pool = pool or WorkerPool()
    shards = range(shard_count(spec.size))
    worker = partial(enumerate_shard, spec.size, spec.one_vertex_only)

    found: set[str] = set()
    for shard, signatures in zip(shards, pool.map(worker, shards), strict=True):
        found.update(signatures)
        logger.debug(
            "Census shard %d/%d gave %d signatures",
            shard + 1,
            len(shards),
            len(signatures),
        )
    logger.info("Census of size %d: %d triangulations", spec.size, len(found))
    return sorted(found)


def is_one_vertex(sig: str) -> bool:
    """Whether the triangulation with signature ``sig`` has a single vertex."""
    return skeleton(decode(sig, canonical=False)).V == 1


def census_counts(
    max_size: int,
    pool: WorkerPool | None = None,
    *,
    ceiling: int = DEFAULT_CEILING,
    allow_above_ceiling: bool = False,
) -> list[CensusRow]:
    """Closed and one-vertex counts for sizes ``1..max_size``."""
    rows = []
    for size in range(1, max_size + 1):
        spec = CensusSpec(
            size, ceiling=ceiling, allow_above_ceiling=allow_above_ceiling
        )
        closed = enumerate_closed(spec, pool)
        one_vertex = sum(1 for sig in closed if is_one_vertex(sig))
        rows.append(CensusRow(size, len(closed), one_vertex))
    return rows


def raw_gluing_count(n: int) -> Fraction:
    """Naive count of gluing tables up to relabelling.

    ``(4n-1)!! 6^(2n) / (n! 24^n)``, not an integer in general.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    pairings = prod(range(4 * n - 1, 0, -2))
    return Fraction(pairings * 6 ** (2 * n), factorial(n) * 24**n)
