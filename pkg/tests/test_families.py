import pytest

from chords.diagram import ChordDiagram
from chords.errors import ChordError
from chords.families import cw, cycloid, ladder, make_family, wheel
from chords.order import order_labels, stats
from symbolic.polynomial import FMonomial


def test_size_three_members(rccd3):
    assert cycloid(3) == rccd3["cycloid"]
    assert wheel(3) == rccd3["wheel"]
    assert ladder(3) == rccd3["ladder"]


def test_size_one_members_coincide():
    assert cycloid(1) == wheel(1) == ladder(1) == ChordDiagram.single()


@pytest.mark.parametrize("n", range(1, 8))
def test_cycloid_stats(n):
    s = stats(cycloid(n))
    assert s.sigma == tuple(range(1, n + 1))
    assert s.terminal == (n,)
    assert s.b == n
    assert s.delta == ()
    assert s.delta_bar == (0,) * (n - 1)
    assert s.monomial == FMonomial.from_exponents({0: n - 1})


@pytest.mark.parametrize("n", range(1, 8))
def test_wheel_stats(n):
    s = stats(wheel(n))
    assert s.terminal == (n,)
    assert s.delta_bar == (0,) * (n - 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_ladder_stats(n):
    s = stats(ladder(n))
    assert s.terminal == tuple(range(2, n + 1))
    assert s.b == 2
    assert s.delta == (1,) * (n - 2)
    assert s.monomial == FMonomial.from_exponents({0: 1, 1: n - 2})


def test_cw_order():
    diagram = cw([2, 1, 3])
    assert diagram.n == 9
    assert diagram.is_connected
    labels = order_labels(diagram)
    assert [labels[c] for c in range(1, 10)] == [1, 2, 3, 8, 9, 7, 4, 5, 6]


def test_cw_blocks_come_in_reverse():
    # spokes first, then the blocks B_n, ..., B_1
    diagram = cw([1, 1, 1])
    assert stats(diagram).sigma == (1, 2, 3, 6, 5, 4)


def test_make_family_dispatch():
    assert make_family("wheel", [4]) == wheel(4)
    assert make_family("cw", [2, 1, 3]) == cw([2, 1, 3])


@pytest.mark.parametrize(
    "kind, params",
    [("wheel", [0]), ("cycloid", [-2]), ("ladder", [2, 3]), ("cw", []), ("cw", [1, 0]), ("star", [3])],
)
def test_make_family_rejects(kind, params):
    with pytest.raises(ChordError):
        make_family(kind, params)
