import pytest

from pachner.errors import IllegalMove
from pachner.moves import RESTRICTED_KINDS, MoveKind, MoveSite, move_registry


def test_move_kinds():
    assert MoveKind("2-3") is MoveKind.TWO_THREE
    assert MoveKind.TWO_THREE.inverse is MoveKind.THREE_TWO
    assert MoveKind.FOUR_ONE.inverse is MoveKind.ONE_FOUR
    assert [k.size_delta for k in MoveKind] == [1, -1, 3, -3]
    assert [k.vertex_delta for k in MoveKind] == [0, 0, 1, -1]
    assert RESTRICTED_KINDS == {MoveKind.TWO_THREE, MoveKind.THREE_TWO}


def test_sites_order_and_render():
    a = MoveSite(MoveKind.TWO_THREE, 0, 3)
    b = MoveSite(MoveKind.TWO_THREE, 1, 0)
    assert sorted([b, a]) == [a, b]
    assert str(a) == "2-3@(0,3)"


def test_registry_has_all_four_moves():
    assert set(move_registry.kinds()) == set(MoveKind)
    assert move_registry.get("1-4").kind is MoveKind.ONE_FOUR


@pytest.mark.parametrize("kind", ["5-0", "2-2", ""])
def test_registry_rejects_unknown_kind(kind):
    with pytest.raises(IllegalMove):
        move_registry.get(kind)


def test_site_of_wrong_kind_is_refused(sphere_two):
    with pytest.raises(IllegalMove):
        two_three = move_registry.get(MoveKind.TWO_THREE)
        two_three.apply(sphere_two, MoveSite(MoveKind.THREE_TWO, 0))
