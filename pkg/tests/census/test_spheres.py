import pytest

from pachner.census import sphere_closure
from pachner.census.spheres import FLOOR, expand_sphere
from pachner.core import homology_h1, skeleton
from pachner.isosig import decode, isosig
from pachner.isosig.signature import signature_size
from pachner.parallel import WorkerPool


def test_level_one_only(sphere_one):
    closure = sphere_closure(1, 0)
    assert closure.levels == {1: (isosig(sphere_one),)}
    assert closure.counts() == {1: 1}


def test_levels_up_to_three(spheres_to_three, layered):
    assert spheres_to_three.counts() == {1: 1, 2: 3, 3: 20}
    assert isosig(layered) in spheres_to_three.level(2)
    assert spheres_to_three.level(4) == ()


def test_every_found_node_is_a_one_vertex_homology_sphere(spheres_to_three):
    for n in (2, 3):
        for sig in spheres_to_three.level(n):
            t = decode(sig)
            assert t.n == n
            assert skeleton(t).V == 1
            assert homology_h1(t).is_trivial


def test_spheres_are_census_members(spheres_to_three, census_two):
    assert set(spheres_to_three.level(2)) <= set(census_two)


def test_expansion_respects_bounds(layered):
    sig = isosig(layered)
    assert expand_sphere(sig, top=2) == []
    assert all(signature_size(s) == 3 for s in expand_sphere(sig, top=3))
    for s in expand_sphere(sig, top=3):
        assert all(signature_size(r) in (FLOOR, 3, 4) for r in expand_sphere(s, top=4))


def test_bad_arguments():
    with pytest.raises(ValueError):
        sphere_closure(0, 2)
    with pytest.raises(ValueError):
        sphere_closure(3, -1)


@pytest.mark.slow
def test_levels_up_to_five():
    with WorkerPool(4) as pool:
        closure = sphere_closure(5, 2, pool)
    assert closure.counts() == {1: 1, 2: 3, 3: 20, 4: 128, 5: 1297}
