import pytest

from pachner.errors import EmptyLevel
from pachner.graph import height_bound, height_bound_two_phase
from pachner.graph.height import up_down_endpoints
from pachner.isosig import decode
from pachner.isosig.signature import signature_size
from pachner.moves import MoveKind, neighbors
from pachner.parallel import WorkerPool


def _components(nodes: set[str], arcs: dict[str, set[str]]) -> int:
    """Count components by depth-first search over undirected arcs."""
    links: dict[str, set[str]] = {node: set() for node in nodes}
    for source, targets in arcs.items():
        for target in targets:
            links[source].add(target)
            links[target].add(source)
    seen: set[str] = set()
    count = 0
    for node in nodes:
        if node in seen:
            continue
        count += 1
        stack = [node]
        while stack:
            current = stack.pop()
            if current not in seen:
                seen.add(current)
                stack.extend(links[current] - seen)
    return count


def test_level_three(spheres_to_three):
    report = height_bound(3, spheres_to_three.level(3))
    assert report.trace == (20, 8, 1)
    assert report.bound == 2
    assert not report.inconclusive
    assert not report.two_phase


def test_level_three_against_independent_count(spheres_to_three):
    nodes = set(spheres_to_three.level(3))
    arcs: dict[str, set[str]] = {}
    trace = [_components(nodes, arcs)]
    frontier = sorted(nodes)
    for _ in range(2):
        fresh = set()
        for sig in frontier:
            arcs[sig] = neighbors(decode(sig), (MoveKind.TWO_THREE,))
            fresh |= arcs[sig]
        nodes |= fresh
        frontier = sorted(fresh)
        trace.append(_components(nodes, arcs))
    assert tuple(trace) == height_bound(3, spheres_to_three.level(3)).trace


def test_two_phase_agrees(spheres_to_three):
    report = height_bound_two_phase(3, spheres_to_three.level(3))
    assert report.trace == (20, 8, 1)
    assert report.bound == 2
    assert report.two_phase


def test_parallel_matches_serial(spheres_to_three):
    with WorkerPool(2) as pool:
        assert height_bound(3, spheres_to_three.level(3), pool=pool).trace == (20, 8, 1)


def test_height_guard_gives_inconclusive_report(spheres_to_three):
    report = height_bound(3, spheres_to_three.level(3), max_height=1)
    assert report.inconclusive
    assert report.bound is None
    assert report.trace == (20, 8)

    report = height_bound_two_phase(3, spheres_to_three.level(3), max_height=0)
    assert report.inconclusive
    assert report.trace == (20,)


def test_single_node_level_needs_no_climb(layered):
    from pachner.isosig import isosig

    report = height_bound(2, [isosig(layered)])
    assert report.trace == (1,)
    assert report.bound == 0


def test_up_down_endpoints_stay_on_level(spheres_to_three):
    sig = spheres_to_three.level(3)[0]
    endpoints = up_down_endpoints(sig)
    assert sig not in endpoints
    assert endpoints == sorted(endpoints)
    assert all(signature_size(s) == 3 for s in endpoints)


def test_empty_level():
    with pytest.raises(EmptyLevel):
        height_bound(3, [])
    with pytest.raises(EmptyLevel):
        height_bound_two_phase(3, [])


@pytest.mark.slow
@pytest.mark.parametrize(("n", "trace"), [(4, (128, 50, 1)), (5, (1297, 196, 1))])
def test_larger_levels(n, trace):
    from pachner.census import sphere_closure

    with WorkerPool(4) as pool:
        level = sphere_closure(n, 2, pool).level(n)
        assert height_bound(n, level, pool=pool).trace == trace
        two_phase = height_bound_two_phase(n, level, pool=pool)
    assert two_phase.trace[:2] == trace[:2]
    assert two_phase.bound == 2
