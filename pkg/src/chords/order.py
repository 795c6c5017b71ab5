"""Intersection order and the terminal-chord statistics read off in that order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from chords.diagram import ChordDiagram, IntersectionGraph, intersection_graph
from symbolic.polynomial import FMonomial

# per-diagram memo size; RCCD(7) alone has 38232 members
DIAGRAM_CACHE_SIZE = 1 << 16


def _order_block(graph: nx.Graph, vertices: Sequence[int]) -> List[int]:
    head, rest = vertices[0], list(vertices[1:])
    if not rest:
        return [head]
    # head is the smallest vertex, so all its edges are outgoing: drop it
    blocks = sorted((sorted(c) for c in nx.connected_components(graph.subgraph(rest))), key=lambda c: c[0])
    order = [head]
    for block in blocks:
        order.extend(_order_block(graph, block))
    return order


@lru_cache(maxsize=DIAGRAM_CACHE_SIZE)
def intersection_order(diagram: ChordDiagram) -> Tuple[int, ...]:
    """
    The intersection order as a tuple: position ``p`` holds the counterclockwise
    label of the chord that comes ``p``-th.
    """
    diagram.require_connected()
    graph = intersection_graph(diagram).to_undirected()
    return tuple(_order_block(graph, list(range(1, diagram.n + 1))))


def order_labels(diagram: ChordDiagram) -> Dict[int, int]:
    """Map counterclockwise label -> intersection-order label."""
    return {ccw: pos for pos, ccw in enumerate(intersection_order(diagram), start=1)}


def ordered_graph(diagram: ChordDiagram) -> IntersectionGraph:
    """The intersection graph relabelled in the intersection order."""
    return intersection_graph(diagram).relabel(order_labels(diagram))


@dataclass(frozen=True)
class DiagramStats:
    sigma: Tuple[int, ...]
    terminal: Tuple[int, ...]
    b: int
    delta: Tuple[int, ...]
    delta_bar: Tuple[int, ...]
    monomial: FMonomial

    @property
    def n(self) -> int:
        return len(self.sigma)

    def to_json(self) -> Dict[str, object]:
        return {
            "sigma": list(self.sigma),
            "terminal": list(self.terminal),
            "b": self.b,
            "delta": list(self.delta),
            "delta_bar": list(self.delta_bar),
            "monomial": self.monomial.to_json(),
        }


@lru_cache(maxsize=DIAGRAM_CACHE_SIZE)
def stats(diagram: ChordDiagram) -> DiagramStats:
    sigma = intersection_order(diagram)
    n = diagram.n
    graph = ordered_graph(diagram)
    has_out = {i for i, _ in graph.edges}
    terminal = tuple(v for v in range(1, n + 1) if v not in has_out)
    delta = tuple(b - a for a, b in zip(terminal, terminal[1:]))
    delta_bar = (0,) * (n - len(terminal)) + delta
    monomial = FMonomial.from_indices(delta_bar)
    return DiagramStats(
        sigma=sigma,
        terminal=terminal,
        b=terminal[0],
        delta=delta,
        delta_bar=delta_bar,
        monomial=monomial,
    )


def stats_json(diagram: ChordDiagram) -> Dict[str, object]:
    data = diagram.to_json()
    data.update(stats(diagram).to_json())
    return data
