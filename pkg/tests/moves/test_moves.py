import pytest

from pachner.core import homology_h1, skeleton
from pachner.errors import IllegalMove
from pachner.isosig import decode, isosig
from pachner.moves import (
    MoveKind,
    MoveSite,
    apply_move,
    greedy_simplify,
    greedy_simplify_traced,
    jumps,
    list_moves,
    move_registry,
    neighbors,
)
from pachner.moves.flip import edge_ring
from pachner.moves.search import has_move, neighbor_signatures


def test_single_tetrahedron_is_isolated(sphere_one):
    assert neighbors(sphere_one) == set()
    assert list_moves(sphere_one, MoveKind.TWO_THREE) == []
    assert list_moves(sphere_one, MoveKind.THREE_TWO) == []


def test_two_three_on_face_shared_with_itself_is_illegal(sphere_one):
    with pytest.raises(IllegalMove):
        apply_move(sphere_one, MoveSite(MoveKind.TWO_THREE, 0, 0))


def test_two_three_results(sphere_two):
    sites = list_moves(sphere_two, MoveKind.TWO_THREE)
    assert sites
    assert sites == sorted(sites)
    for site in sites:
        result = apply_move(sphere_two, site)
        assert result.n == 3
        assert skeleton(result).V == skeleton(sphere_two).V
        assert homology_h1(result).is_trivial


def test_two_three_is_undone_by_three_two(sphere_two, projective_space):
    for t in (sphere_two, projective_space):
        for site in list_moves(t, MoveKind.TWO_THREE):
            result = apply_move(t, site)
            assert isosig(t) in neighbors(result, (MoveKind.THREE_TWO,))


def test_one_four_then_four_one(census_one):
    for sig in census_one:
        t = decode(sig)
        for site in list_moves(t, MoveKind.ONE_FOUR):
            result = apply_move(t, site)
            assert result.n == t.n + 3
            assert skeleton(result).V == skeleton(t).V + 1
            assert homology_h1(result) == homology_h1(t)
            assert sig in neighbors(result, (MoveKind.FOUR_ONE,))


def test_moves_preserve_homology_and_invert(census_two):
    for sig in census_two:
        t = decode(sig)
        h1 = homology_h1(t)
        for kind in MoveKind:
            for _, result in move_registry.get(kind).legal_moves(t):
                assert result.n == t.n + kind.size_delta
                assert skeleton(result).is_closed_3manifold
                assert homology_h1(result) == h1
                assert sig in neighbors(result, (kind.inverse,))


def test_invalid_triangulation_has_no_moves(invalid_edge):
    for kind in MoveKind:
        assert list_moves(invalid_edge, kind) == []


def test_degree_three_edge_ring(sphere_two):
    result = apply_move(sphere_two, list_moves(sphere_two, MoveKind.TWO_THREE)[0])
    site = list_moves(result, MoveKind.THREE_TWO)[0]
    ring = edge_ring(result, site.tet, site.sub)
    assert len(ring) == 3
    assert sorted(tet for tet, _ in ring) == [0, 1, 2]


def test_restricted_neighbours_of_level_two(layered, spheres_to_three):
    found = neighbors(layered)
    assert found
    assert found <= set(spheres_to_three.level(3))


def test_neighbor_signatures_sorted(layered):
    sig = isosig(layered)
    listed = neighbor_signatures(sig, (MoveKind.TWO_THREE,))
    assert listed == sorted(neighbors(layered, (MoveKind.TWO_THREE,)))


def test_has_move(layered, spheres_to_three):
    assert has_move(isosig(layered), MoveKind.TWO_THREE)
    assert not has_move(isosig(layered), MoveKind.THREE_TWO)
    assert any(has_move(sig, MoveKind.THREE_TWO) for sig in spheres_to_three.level(3))


def test_jumps_stay_on_level(spheres_to_three):
    level = set(spheres_to_three.level(3))
    for sig in sorted(level)[:3]:
        reached = jumps(decode(sig))
        assert reached
        assert reached <= level


def test_greedy_simplify_undoes_a_flip(sphere_two):
    bigger = apply_move(sphere_two, list_moves(sphere_two, MoveKind.TWO_THREE)[0])
    result, trace = greedy_simplify_traced(bigger, max_rounds=1)
    assert result.n == 2
    assert trace[0].kind == "3-2"
    assert trace[-1].signature == isosig(result)
    assert skeleton(result).V == skeleton(sphere_two).V


def test_greedy_simplify_removes_subdivision(projective_space):
    bigger = apply_move(projective_space, MoveSite(MoveKind.ONE_FOUR, 0))
    result = greedy_simplify(bigger, max_rounds=1)
    assert result.n < bigger.n
    assert homology_h1(result) == homology_h1(projective_space)


def test_greedy_simplify_leaves_minimal_triangulation(projective_space):
    result, trace = greedy_simplify_traced(projective_space, max_rounds=2)
    assert result is projective_space
    assert trace == []


@pytest.mark.slow
@pytest.mark.parametrize("size", [3, 4])
def test_moves_preserve_homology_larger_census(size):
    from pachner.census import enumerate_closed
    from pachner.census.enumerate import CensusSpec
    from pachner.parallel import WorkerPool

    with WorkerPool(4) as pool:
        signatures = enumerate_closed(CensusSpec(size), pool)
    for sig in signatures:
        t = decode(sig)
        assert skeleton(t).min_edge_degree <= 5
        h1 = homology_h1(t)
        for kind in MoveKind:
            for _, result in move_registry.get(kind).legal_moves(t):
                assert homology_h1(result) == h1
                assert sig in neighbors(result, (kind.inverse,))


def _check_move_counts(t) -> None:
    assert len(list_moves(t, MoveKind.TWO_THREE)) >= t.n - 1
    assert len(list_moves(t, MoveKind.THREE_TWO)) <= 6 * t.n
    assert len(neighbors(t, (MoveKind.TWO_THREE,))) <= 2 * t.n


def _check_flip_symmetry(levels) -> None:
    """2-3 neighbours and 3-2 neighbours are mirror images between levels."""
    down = {
        sig: neighbors(decode(sig), (MoveKind.THREE_TWO,))
        for level in levels[1:]
        for sig in level
    }
    for lower in levels[:-1]:
        for sig in lower:
            for upper in neighbors(decode(sig), (MoveKind.TWO_THREE,)):
                assert sig in down[upper]
    for upper, found in down.items():
        for sig in found:
            assert upper in neighbors(decode(sig), (MoveKind.TWO_THREE,))


def _simplified_size(sig: str) -> int:
    return greedy_simplify(decode(sig)).n


def test_move_counts(census_two, spheres_to_three):
    for sig in census_two + list(spheres_to_three.level(3)):
        _check_move_counts(decode(sig))


def test_flip_symmetry_up_to_level_three(spheres_to_three):
    _check_flip_symmetry([spheres_to_three.level(n) for n in (1, 2, 3)])


def test_jumps_contain_the_start(layered, spheres_to_three):
    for t in [layered] + [decode(sig) for sig in spheres_to_three.level(3)[:5]]:
        assert isosig(t) in jumps(t)


def test_greedy_simplify_keeps_two_tetrahedron_sphere(sphere_two):
    result, trace = greedy_simplify_traced(sphere_two)
    assert result is sphere_two
    assert trace == []


def test_greedy_simplify_level_three_spheres(spheres_to_three):
    for sig in spheres_to_three.level(3):
        assert _simplified_size(sig) == 2


@pytest.mark.slow
def test_move_counts_and_symmetry_up_to_level_four():
    from pachner.census import enumerate_closed, sphere_closure
    from pachner.census.enumerate import CensusSpec
    from pachner.parallel import WorkerPool

    with WorkerPool(4) as pool:
        closure = sphere_closure(4, 2, pool)
        for size in (3, 4):
            for sig in enumerate_closed(CensusSpec(size), pool):
                _check_move_counts(decode(sig))
    _check_flip_symmetry([closure.level(n) for n in (1, 2, 3, 4)])


@pytest.mark.slow
def test_greedy_simplify_sphere_levels_four_and_five():
    from pachner.census import sphere_closure
    from pachner.parallel import WorkerPool

    with WorkerPool(4) as pool:
        closure = sphere_closure(5, 2, pool)
        for n in (4, 5):
            assert set(pool.map(_simplified_size, closure.level(n))) == {2}
