import networkx as nx
import pytest
from hypothesis import given, strategies as st

from chords.diagram import (
    ChordDiagram,
    chords_cross,
    delete_chord,
    insert,
    intersection_graph,
    is_connected,
    root_share_decompose,
)
from chords.enumeration import rccd
from chords.errors import DisconnectedDiagramError, IntervalError, InvalidPairingError

CROSSING = ChordDiagram((3, 4, 1, 2))


def test_chords_cross():
    assert chords_cross((1, 3), (2, 4))
    assert chords_cross((2, 4), (1, 3))
    assert not chords_cross((1, 4), (2, 3))
    assert not chords_cross((1, 2), (3, 4))


@pytest.mark.parametrize("pairing", [(1, 2), (2, 1, 4), (2, 3, 1, 4), (5, 1), ()])
def test_invalid_pairings_rejected(pairing):
    with pytest.raises(InvalidPairingError):
        ChordDiagram(pairing)


def test_from_word_and_letters():
    diagram = ChordDiagram.from_word("ABAB")
    assert diagram == CROSSING
    assert diagram.letters() == "ABAB"
    assert diagram.chords == ((1, 3), (2, 4))
    assert ChordDiagram.from_chords([(1, 3), (2, 4)]) == diagram


def test_from_word_unpaired():
    with pytest.raises(InvalidPairingError):
        ChordDiagram.from_word("ABA")


def test_json_round_trip():
    diagram = ChordDiagram((3, 5, 1, 6, 2, 4))
    assert diagram.to_json() == {"n": 3, "pairing": [3, 5, 1, 6, 2, 4]}
    assert ChordDiagram.from_json(diagram.to_json()) == diagram
    with pytest.raises(InvalidPairingError):
        ChordDiagram.from_json({"n": 2, "pairing": [3, 5, 1, 6, 2, 4]})


def test_single_chord_graph():
    graph = intersection_graph(ChordDiagram.single())
    assert graph.n == 1
    assert graph.edges == frozenset()
    assert is_connected(ChordDiagram.single())


def test_four_chord_example_graph():
    diagram = ChordDiagram.from_word("ABACDBDC")
    assert intersection_graph(diagram).edges == {(1, 2), (2, 3), (2, 4)}
    assert diagram.is_connected


@pytest.mark.parametrize("n", [2, 3, 5])
def test_wheel_graph_is_complete(n):
    diagram = ChordDiagram.from_chords((i, n + i) for i in range(1, n + 1))
    expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    assert intersection_graph(diagram).edges == expected


def test_disconnected_examples():
    assert not ChordDiagram((4, 3, 2, 1)).is_connected
    assert not ChordDiagram.from_word("ABBA").is_connected
    assert not ChordDiagram.from_word("AABCBC").is_connected
    assert ChordDiagram.from_word("ABCABC").is_connected


def test_insert_single_into_single():
    assert insert(ChordDiagram.single(), ChordDiagram.single(), 1) == CROSSING


@pytest.mark.parametrize("interval", [0, 2, -1])
def test_insert_interval_out_of_range(interval):
    with pytest.raises(IntervalError):
        insert(ChordDiagram.single(), ChordDiagram.single(), interval)


def test_insert_places_root_share():
    # inner ABAB placed in interval 1 of ABAB: root, host endpoint 1, rest of inner, rest of host
    result = insert(CROSSING, CROSSING, 1)
    assert result.letters() == "ABCACDBD"
    assert result.is_connected


def test_decompose_crossing():
    assert root_share_decompose(CROSSING) == (ChordDiagram.single(), 1, ChordDiagram.single())


def test_decompose_ladder():
    ladder = ChordDiagram.from_chords([(1, 4), (2, 6), (3, 5)])
    assert root_share_decompose(ladder) == (CROSSING, 1, ChordDiagram.single())


def test_decompose_rejects_single_and_disconnected():
    with pytest.raises(ValueError):
        root_share_decompose(ChordDiagram.single())
    with pytest.raises(DisconnectedDiagramError):
        root_share_decompose(ChordDiagram((4, 3, 2, 1)))


def test_insert_then_decompose():
    for total in range(2, 6):
        for inner_size in range(1, total):
            for inner in rccd(inner_size):
                for host in rccd(total - inner_size):
                    for interval in range(1, 2 * host.n):
                        joined = insert(inner, host, interval)
                        assert joined.n == total
                        assert joined.is_connected
                        assert root_share_decompose(joined) == (inner, interval, host)


def test_decompose_then_insert(rccd_by_n):
    for n in range(2, 7):
        for diagram in rccd_by_n[n]:
            inner, interval, host = root_share_decompose(diagram)
            assert insert(inner, host, interval) == diagram


def test_delete_chord():
    ladder = ChordDiagram.from_chords([(1, 4), (2, 6), (3, 5)])
    assert delete_chord(ladder, 3) == ChordDiagram.from_word("ABAB")
    assert not delete_chord(ladder, 1).is_connected


@given(st.permutations(list(range(1, 9))))
def test_connectivity_matches_networkx(order):
    # any permutation read in pairs is a matching on 1..8
    chords = [tuple(sorted(order[i:i + 2])) for i in range(0, 8, 2)]
    diagram = ChordDiagram.from_chords(chords)
    assert diagram.is_connected == nx.is_connected(intersection_graph(diagram).to_undirected())
