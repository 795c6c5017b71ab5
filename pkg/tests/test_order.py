import networkx as nx
import pytest

from chords.diagram import ChordDiagram, intersection_graph
from chords.errors import DisconnectedDiagramError
from chords.order import DIAGRAM_CACHE_SIZE, intersection_order, order_labels, ordered_graph, stats, stats_json
from chords.trees import to_tree
from symbolic.polynomial import f

WORKED = ChordDiagram((4, 7, 5, 1, 3, 8, 2, 6))


def test_worked_example_order():
    assert intersection_graph(WORKED).edges == {(1, 2), (1, 3), (2, 4)}
    assert intersection_order(WORKED) == (1, 2, 4, 3)
    assert order_labels(WORKED) == {1: 1, 2: 2, 4: 3, 3: 4}
    assert ordered_graph(WORKED).edges == {(1, 2), (1, 4), (2, 3)}


def test_worked_example_stats():
    s = stats(WORKED)
    assert s.terminal == (3, 4)
    assert s.b == 3
    assert s.delta == (1,)
    assert s.delta_bar == (0, 0, 1)
    assert s.monomial.to_poly() == f(0) ** 2 * f(1)
    assert str(s.monomial) == "f_0^2*f_1"


def test_stats_json():
    data = stats_json(WORKED)
    assert data["pairing"] == [4, 7, 5, 1, 3, 8, 2, 6]
    assert data["sigma"] == [1, 2, 4, 3]
    assert data["monomial"] == {"0": 2, "1": 1}


def test_single_chord_stats():
    s = stats(ChordDiagram.single())
    assert s.sigma == (1,)
    assert s.terminal == (1,)
    assert s.b == 1
    assert s.delta_bar == ()
    assert s.monomial.degree == 0


def test_disconnected_rejected():
    with pytest.raises(DisconnectedDiagramError):
        stats(ChordDiagram((4, 3, 2, 1)))
    with pytest.raises(DisconnectedDiagramError):
        intersection_order(ChordDiagram.from_word("AABB"))


def test_rccd3_stats(rccd3):
    assert stats(rccd3["wheel"]).b == 3
    assert stats(rccd3["cycloid"]).b == 3
    assert stats(rccd3["other"]).b == 3
    ladder = stats(rccd3["ladder"])
    assert ladder.b == 2
    assert ladder.monomial.to_poly() == f(0) * f(1)
    assert stats(rccd3["other"]).monomial.to_poly() == f(0) ** 2


@pytest.mark.parametrize("n", range(1, 7))
def test_stats_invariants(rccd_by_n, n):
    for diagram in rccd_by_n[n]:
        s = stats(diagram)
        assert sorted(s.sigma) == list(range(1, n + 1))
        assert s.terminal[-1] == n
        assert sum(s.delta) == n - s.b
        assert len(s.delta_bar) == n - 1
        assert s.monomial.degree == n - 1
        assert (s.b == 1) == (n == 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_ordered_graph_is_isomorphic(rccd_by_n, n):
    for diagram in rccd_by_n[n]:
        original = intersection_graph(diagram)
        mapping = order_labels(diagram)
        relabelled = ordered_graph(diagram)
        assert nx.is_isomorphic(original.to_undirected(), relabelled.to_undirected())
        assert {frozenset((mapping[i], mapping[j])) for i, j in original.edges} == {
            frozenset(e) for e in relabelled.edges
        }


@pytest.mark.parametrize("memo", [stats, intersection_order, to_tree])
def test_diagram_memo_is_bounded(memo):
    assert memo.cache_info().maxsize == DIAGRAM_CACHE_SIZE
    memo(WORKED)
    assert 0 < memo.cache_info().currsize <= DIAGRAM_CACHE_SIZE
