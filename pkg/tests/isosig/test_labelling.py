import pytest

from pachner.core import Perm4
from pachner.isosig import canonical_labellings
from pachner.isosig.labelling import (
    apply_labelling,
    destination_sequence,
    forced_labelling,
)


def _is_canonical(t) -> bool:
    seen = 1
    for slot, other in enumerate(t.adj):
        if other == seen:
            if t.glu[slot] != 0:
                return False
            seen += 1
        elif other > seen:
            return False
    return seen == t.n


def test_three_tetrahedra_destination_sequence(three_tetrahedra):
    expected = [0, 1, 2, 0, 2, 0, 1, 1, 2, 1, 0, 2]
    assert destination_sequence(three_tetrahedra) == expected


def test_three_tetrahedra_is_already_canonical(three_tetrahedra):
    labelling = forced_labelling(three_tetrahedra, 0, Perm4.identity())
    assert labelling.tet_order == (0, 1, 2)
    assert labelling.vertex_perms == (Perm4.identity(),) * 3
    assert apply_labelling(three_tetrahedra, labelling) == three_tetrahedra


def test_there_are_24n_labellings(projective_space, three_tetrahedra):
    for t in (projective_space, three_tetrahedra):
        labellings = canonical_labellings(t)
        assert len(labellings) == 24 * t.n
        assert len({(lab.start_tet, lab.start_perm) for lab in labellings}) == 24 * t.n


def test_every_labelling_is_canonical(three_tetrahedra, census_two):
    from pachner.isosig import decode

    triangulations = [three_tetrahedra] + [decode(sig) for sig in census_two]
    for t in triangulations:
        for labelling in canonical_labellings(t):
            relabelled = apply_labelling(t, labelling)
            assert _is_canonical(relabelled)
            assert relabelled.n == t.n


def _distinct_labellings(t) -> int:
    return len(
        {(lab.tet_order, lab.vertex_perms) for lab in canonical_labellings(t)}
    )


def test_labellings_are_distinct_across_census(census_one, census_two):
    from pachner.isosig import decode

    for sig in census_one + census_two:
        t = decode(sig)
        assert _distinct_labellings(t) == 24 * t.n


@pytest.mark.slow
def test_labellings_are_distinct_up_to_size_five():
    from pachner.census import enumerate_closed
    from pachner.census.enumerate import CensusSpec
    from pachner.isosig import decode
    from pachner.parallel import WorkerPool

    with WorkerPool(4) as pool:
        for size in range(3, 6):
            for sig in enumerate_closed(CensusSpec(size), pool):
                assert _distinct_labellings(decode(sig, canonical=False)) == 24 * size
