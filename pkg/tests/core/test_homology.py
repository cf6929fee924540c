import random

import pytest

from pachner.core import Perm4, homology_h1, relabel, skeleton
from pachner.core.homology import HomologyProfile, boundary_matrix
from pachner.errors import NotAManifold
from pachner.isosig import decode


def test_spheres_have_trivial_homology(sphere_one, sphere_two, layered):
    for t in (sphere_one, sphere_two, layered):
        assert homology_h1(t).is_trivial


def test_projective_space(projective_space):
    h1 = homology_h1(projective_space)
    assert h1.h1_invariant_factors == (2,)
    assert str(h1) == "Z/2"
    assert h1.rank == 0


def test_single_tetrahedron_census(census_one):
    profiles = sorted(
        homology_h1(decode(sig)).h1_invariant_factors for sig in census_one
    )
    assert profiles == [(), (), (4,), (5,)]


def test_invalid_triangulation_has_no_homology(invalid_edge):
    with pytest.raises(NotAManifold):
        homology_h1(invalid_edge)


def test_boundary_matrix_shape(projective_space):
    skel = skeleton(projective_space)
    matrix = boundary_matrix(projective_space, skel)
    assert matrix.shape == (skel.E, skel.F)


def test_homology_invariant_under_relabel(census_two):
    rng = random.Random(11)
    for sig in census_two:
        t = decode(sig)
        order = list(range(t.n))
        rng.shuffle(order)
        perms = [Perm4(rng.randrange(24)) for _ in order]
        assert homology_h1(relabel(t, order, perms)) == homology_h1(t)


def test_profile_rendering():
    assert str(HomologyProfile(())) == "0"
    assert str(HomologyProfile((2, 0))) == "Z/2 + Z"
    assert HomologyProfile((2, 0)).rank == 1
    assert HomologyProfile((6, 12)).primary_factors() == [2, 3, 3, 4]
