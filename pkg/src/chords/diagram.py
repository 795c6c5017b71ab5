"""
Rooted chord diagrams as fixed-point-free involutions on 1..2n.

Endpoints are numbered counterclockwise with 1 the root endpoint. Chords are
numbered counterclockwise by their first endpoint, so chord 1 is the root
chord. A diagram is an immutable value; equality is equality of the partner
array, so mirror images are different diagrams.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from string import ascii_uppercase
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from chords.errors import ChordError, DisconnectedDiagramError, IntervalError, InvalidPairingError

Chord = Tuple[int, int]


def chords_cross(a: Chord, b: Chord) -> bool:
    """True when the endpoint pairs interleave on the circle."""
    (a1, a2), (b1, b2) = a, b
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


@dataclass(frozen=True)
class ChordDiagram:
    pairing: Tuple[int, ...]

    def __post_init__(self) -> None:
        pairing = tuple(int(p) for p in self.pairing)
        object.__setattr__(self, "pairing", pairing)
        size = len(pairing)
        if size == 0 or size % 2:
            raise InvalidPairingError(f"need an even, positive number of endpoints, got {size}")
        for i, p in enumerate(pairing, start=1):
            if not 1 <= p <= size:
                raise InvalidPairingError(f"endpoint {i} paired with {p}, outside 1..{size}")
            if p == i:
                raise InvalidPairingError(f"endpoint {i} is paired with itself")
            if pairing[p - 1] != i:
                raise InvalidPairingError(f"pairing is not an involution at endpoint {i}")

    @classmethod
    def from_chords(cls, chords: Iterable[Chord]) -> "ChordDiagram":
        chords = list(chords)
        pairing = [0] * (2 * len(chords))
        for a, b in chords:
            if not (1 <= a <= len(pairing) and 1 <= b <= len(pairing)):
                raise InvalidPairingError(f"chord {(a, b)} outside 1..{len(pairing)}")
            if pairing[a - 1] or pairing[b - 1]:
                raise InvalidPairingError(f"endpoint of chord {(a, b)} used twice")
            pairing[a - 1], pairing[b - 1] = b, a
        return cls(tuple(pairing))

    @classmethod
    def from_word(cls, word: Sequence[Hashable]) -> "ChordDiagram":
        """Build a diagram from a sequence in which every chord key occurs twice."""
        seen: Dict[Hashable, int] = {}
        pairing = [0] * len(word)
        for pos, key in enumerate(word, start=1):
            if key in seen:
                first = seen.pop(key)
                pairing[first - 1], pairing[pos - 1] = pos, first
            else:
                seen[key] = pos
        if seen:
            raise InvalidPairingError(f"unpaired chord keys {sorted(map(str, seen))}")
        return cls(tuple(pairing))

    @classmethod
    def single(cls) -> "ChordDiagram":
        return cls((2, 1))

    @property
    def n(self) -> int:
        return len(self.pairing) // 2

    def partner(self, endpoint: int) -> int:
        return self.pairing[endpoint - 1]

    @cached_property
    def chords(self) -> Tuple[Chord, ...]:
        """Chords as ``(first, second)`` endpoint pairs in counterclockwise order."""
        return tuple((i, p) for i, p in enumerate(self.pairing, start=1) if i < p)

    @cached_property
    def chord_at(self) -> Tuple[int, ...]:
        """Counterclockwise chord label of each endpoint (index 0 is endpoint 1)."""
        labels = [0] * len(self.pairing)
        for label, (a, b) in enumerate(self.chords, start=1):
            labels[a - 1] = labels[b - 1] = label
        return tuple(labels)

    @cached_property
    def crossings(self) -> FrozenSet[Tuple[int, int]]:
        """Pairs ``(i, j)``, ``i < j``, of crossing chords by counterclockwise label."""
        out = set()
        for (i, a), (j, b) in itertools.combinations(enumerate(self.chords, start=1), 2):
            if chords_cross(a, b):
                out.add((i, j))
        return frozenset(out)

    @cached_property
    def is_connected(self) -> bool:
        components = UnionFind(range(1, self.n + 1))
        for i, j in self.crossings:
            components.union(i, j)
        return len(list(components.to_sets())) == 1

    def require_connected(self) -> None:
        if not self.is_connected:
            raise DisconnectedDiagramError(f"diagram {list(self.pairing)} is not connected")

    def letters(self) -> str:
        """Bracket-string rendering, e.g. ``"ABAB"`` for the crossing 2-chord diagram."""
        if self.n > len(ascii_uppercase):
            return " ".join(str(c) for c in self.chord_at)
        return "".join(ascii_uppercase[c - 1] for c in self.chord_at)

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "pairing": list(self.pairing)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "ChordDiagram":
        diagram = cls(tuple(data["pairing"]))
        if "n" in data and int(data["n"]) != diagram.n:
            raise InvalidPairingError(f"n={data['n']} does not match pairing of length {len(diagram.pairing)}")
        return diagram

    def __str__(self) -> str:
        return self.letters()


@dataclass(frozen=True)
class IntersectionGraph:
    """Directed intersection graph: edge ``i -> j`` iff chords ``i < j`` cross."""

    n: int
    edges: FrozenSet[Tuple[int, int]]

    def to_undirected(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def relabel(self, mapping: Dict[int, int]) -> "IntersectionGraph":
        """Relabel vertices; an edge keeps the direction small label -> large label."""
        edges = set()
        for i, j in self.edges:
            a, b = mapping[i], mapping[j]
            edges.add((min(a, b), max(a, b)))
        return IntersectionGraph(self.n, frozenset(edges))

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "edges": sorted([list(e) for e in self.edges])}


def intersection_graph(diagram: ChordDiagram) -> IntersectionGraph:
    return IntersectionGraph(diagram.n, diagram.crossings)


def is_connected(diagram: ChordDiagram) -> bool:
    return diagram.is_connected


def insert(inner: ChordDiagram, host: ChordDiagram, interval: int) -> ChordDiagram:
    """
    The ``(0, i)`` insertion: root of ``inner`` in interval 0 of ``host``, the
    other ``2|inner| - 1`` endpoints of ``inner`` contiguous in interval ``i``.

    Interval ``i`` of the host lies between its endpoints ``i`` and ``i + 1``.
    """
    top = 2 * host.n - 1
    if not 1 <= interval <= top:
        raise IntervalError(f"interval {interval} outside 1..{top} for a {host.n}-chord host")
    inner_word = [("inner", c) for c in inner.chord_at]
    host_word = [("host", c) for c in host.chord_at]
    word = inner_word[:1] + host_word[:interval] + inner_word[1:] + host_word[interval:]
    return ChordDiagram.from_word(word)


def _components_without_root(diagram: ChordDiagram) -> List[FrozenSet[int]]:
    components = UnionFind(range(2, diagram.n + 1))
    for i, j in diagram.crossings:
        if i != 1:
            components.union(i, j)
    return [frozenset(s) for s in components.to_sets()]


def root_share_decompose(diagram: ChordDiagram) -> Tuple[ChordDiagram, int, ChordDiagram]:
    """
    Split ``C`` as ``C1 (0,i) C2``: ``C2`` is the component of ``C`` minus its
    root chord that holds endpoint 2, ``C1`` is the root chord with everything else.
    """
    if diagram.n < 2:
        raise ChordError("root-share decomposition needs at least two chords")
    diagram.require_connected()
    second = diagram.chord_at[1]
    remainder = next(c for c in _components_without_root(diagram) if second in c)

    labels = diagram.chord_at
    host_positions = [pos for pos, c in enumerate(labels, start=1) if c in remainder]
    inner_positions = [pos for pos, c in enumerate(labels, start=1) if c not in remainder]

    # the root share sits in one interval of the remainder, after endpoint 1
    block = inner_positions[1:]
    if block != list(range(block[0], block[0] + len(block))):
        raise DisconnectedDiagramError(f"root share of {list(diagram.pairing)} is not contiguous")
    interval = sum(1 for pos in host_positions if pos < block[0])

    host = ChordDiagram.from_word([labels[pos - 1] for pos in host_positions])
    inner = ChordDiagram.from_word([labels[pos - 1] for pos in inner_positions])
    return inner, interval, host


def delete_chord(diagram: ChordDiagram, label: int) -> ChordDiagram:
    """Remove the chord with counterclockwise ``label``; endpoint 1 of the rest becomes the root."""
    if diagram.n < 2:
        raise ChordError("cannot delete the only chord")
    return ChordDiagram.from_word([c for c in diagram.chord_at if c != label])


def canonical_sort(diagrams: Iterable[ChordDiagram]) -> List[ChordDiagram]:
    """Deterministic ordering: by size, then by partner array."""
    return sorted(diagrams, key=lambda d: (d.n, d.pairing))
