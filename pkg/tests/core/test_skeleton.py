import pytest

from pachner.core import is_closed_3manifold, skeleton
from pachner.isosig import decode


@pytest.mark.parametrize(
    ("name", "counts"),
    [
        ("sphere_one", (1, 2, 2)),
        ("sphere_two", (4, 6, 4)),
        ("projective_space", (1, 3, 4)),
    ],
)
def test_cell_counts(request, name, counts):
    skel = skeleton(request.getfixturevalue(name))
    assert (skel.V, skel.E, skel.F) == counts
    assert skel.euler_characteristic == 0


def test_closed_manifolds(sphere_one, sphere_two, projective_space, layered):
    for t in (sphere_one, sphere_two, projective_space, layered):
        skel = skeleton(t)
        assert skel.is_closed_3manifold
        assert all(skel.edge_valid)
        assert all(chi == 2 for chi in skel.link_euler)


def test_layered_sphere_has_one_vertex(layered):
    assert skeleton(layered).V == 1


def test_invalid_edge_detected(invalid_edge):
    skel = skeleton(invalid_edge)
    assert not all(skel.edge_valid)
    assert not skel.is_closed_3manifold
    assert not is_closed_3manifold(invalid_edge)


def test_edge_degrees_sum_to_six_per_tetrahedron(projective_space, three_tetrahedra):
    for t in (projective_space, three_tetrahedra):
        skel = skeleton(t)
        assert sum(skel.edge_degrees) == 6 * t.n
        assert len(skel.edge_degrees) == skel.E


def test_classes_partition_cells(three_tetrahedra):
    skel = skeleton(three_tetrahedra)
    corners = sorted(c for cls in skel.vertex_classes for c in cls)
    assert corners == [(t, v) for t in range(3) for v in range(4)]
    faces = sorted(c for cls in skel.face_classes for c in cls)
    assert faces == [(t, f) for t in range(3) for f in range(4)]
    assert skel.F == 2 * three_tetrahedra.n


def test_census_members_have_low_degree_edge(census_two):
    for sig in census_two:
        assert skeleton(decode(sig)).min_edge_degree <= 5
