from pathlib import Path

import pytest

from pachner.census import enumerate_closed, sphere_closure
from pachner.census.enumerate import CensusSpec
from pachner.core import (
    Triangulation,
    canonical_sphere,
    layered_sphere,
    parse_gluing_table,
)
from pachner.core.perm import COMPOSE, INVERSE, PERMS

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Triangulation:
    return parse_gluing_table((FIXTURES / f"{name}.tri").read_text())


def brute_force_isomorphic(a: Triangulation, b: Triangulation) -> bool:
    """Try every image of tetrahedron 0 and propagate the forced map."""
    if a.n != b.n:
        return False
    for target in range(b.n):
        for start in range(24):
            tet_map = {0: target}
            perm_map = {0: start}
            queue = [0]
            consistent = True
            while queue and consistent:
                t = queue.pop()
                tt, pp = tet_map[t], perm_map[t]
                for f in range(4):
                    other, g = a.adj[4 * t + f], a.glu[4 * t + f]
                    slot_b = 4 * tt + PERMS[pp][f]
                    other_b, g_b = b.adj[slot_b], b.glu[slot_b]
                    want = COMPOSE[COMPOSE[g_b][pp]][INVERSE[g]]
                    if other in tet_map:
                        if tet_map[other] != other_b or perm_map[other] != want:
                            consistent = False
                            break
                    else:
                        tet_map[other] = other_b
                        perm_map[other] = want
                        queue.append(other)
            if consistent and len(set(tet_map.values())) == a.n:
                return True
    return False


@pytest.fixture
def projective_space() -> Triangulation:
    return load_fixture("projective_space")


@pytest.fixture
def three_tetrahedra() -> Triangulation:
    return load_fixture("three_tetrahedra")


@pytest.fixture
def invalid_edge() -> Triangulation:
    return load_fixture("invalid_edge")


@pytest.fixture
def sphere_one() -> Triangulation:
    return canonical_sphere(1)


@pytest.fixture
def sphere_two() -> Triangulation:
    return canonical_sphere(2)


@pytest.fixture
def layered() -> Triangulation:
    return layered_sphere()


@pytest.fixture
def isomorphism_oracle():
    return brute_force_isomorphic


@pytest.fixture(scope="session")
def census_one() -> list[str]:
    return enumerate_closed(CensusSpec(1))


@pytest.fixture(scope="session")
def census_two() -> list[str]:
    return enumerate_closed(CensusSpec(2))


@pytest.fixture(scope="session")
def spheres_to_three():
    return sphere_closure(3, 2)
