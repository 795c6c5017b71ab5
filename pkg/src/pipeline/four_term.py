"""
Four-term configurations among connected diagrams and the alternating sum

    <(A, B, C, D), M_alpha> = M_alpha(A) - M_alpha(B) + M_alpha(C) - M_alpha(D)

with ``M_alpha(X) = f_X f_{b(X) - alpha(X)}``. A configuration moves one free
endpoint of a chord through the four slots next to the endpoints of a pivot
chord: just after ``p1``, just before ``p1``, just after ``p2``, just before ``p2``.
Signs alternate in that order, starting with plus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

import pandas as pd

from chords.diagram import ChordDiagram, delete_chord
from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, rccd
from chords.errors import ChordError
from chords.order import stats
from symbolic.polynomial import FPolynomial, FRing, f, poly_to_str

logger = logging.getLogger(__name__)

Alpha = Union[int, Callable[[ChordDiagram], int]]
SLOTS = ("after p1", "before p1", "after p2", "before p2")
SIGNS = (1, -1, 1, -1)


@dataclass(frozen=True)
class FourTermQuad:
    diagrams: Tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]
    # counterclockwise label of the moving and pivot chords in each member
    moving: Tuple[int, int, int, int]
    pivot: Tuple[int, int, int, int]
    base: ChordDiagram

    def to_json(self) -> Dict[str, object]:
        return {
            "diagrams": [list(d.pairing) for d in self.diagrams],
            "letters": [d.letters() for d in self.diagrams],
            "moving": list(self.moving),
            "pivot": list(self.pivot),
            "base": list(self.base.pairing),
        }


def _alpha_value(alpha: Alpha, diagram: ChordDiagram) -> int:
    return alpha if isinstance(alpha, int) else int(alpha(diagram))


def weight(diagram: ChordDiagram, alpha: Alpha) -> FPolynomial:
    """``M_alpha(X) = f_X f_{b(X) - alpha(X)}``; a negative index gives zero."""
    s = stats(diagram)
    return s.monomial.to_poly() * f(s.b - _alpha_value(alpha, diagram))


def four_term_sum(quad: FourTermQuad, alpha: Alpha) -> FPolynomial:
    total = FRing.zero
    for sign, diagram in zip(SIGNS, quad.diagrams):
        term = weight(diagram, alpha)
        total = total + term if sign > 0 else total - term
    return total


def _label_of(word: List[object], key: object) -> int:
    diagram = ChordDiagram.from_word(word)
    return diagram.chord_at[word.index(key)]


def quad_at(diagram: ChordDiagram, moving: int, endpoint: int, pivot: int) -> Optional[FourTermQuad]:
    """
    Move ``endpoint`` (an endpoint of chord ``moving``, never the root endpoint)
    through the four slots around chord ``pivot``. None when a member is disconnected.
    """
    if moving == pivot:
        raise ChordError("moving and pivot chords must differ")
    if endpoint == 1:
        raise ChordError("the root endpoint cannot move")
    labels = diagram.chord_at
    if labels[endpoint - 1] != moving:
        raise ChordError(f"endpoint {endpoint} is not on chord {moving}")

    word: List[object] = list(labels)
    del word[endpoint - 1]
    p1, p2 = [i for i, c in enumerate(word) if c == pivot]
    size = len(word) + 1
    # a slot before index 0 is the last slot on the circle, keeping endpoint 1 the root
    slots = (p1 + 1, p1 if p1 > 0 else size - 1, p2 + 1, p2)
    members = []
    for slot in slots:
        placed = word[:slot] + [moving] + word[slot:]
        member = ChordDiagram.from_word(placed)
        if not member.is_connected:
            return None
        members.append((member, placed))
    diagrams = tuple(m for m, _ in members)
    return FourTermQuad(
        diagrams=diagrams,
        moving=tuple(_label_of(p, moving) for _, p in members),
        pivot=tuple(_label_of(p, pivot) for _, p in members),
        base=delete_chord(diagrams[0], _label_of(members[0][1], moving)),
    )


def four_term_quads(n: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> List[FourTermQuad]:
    """Every four-term configuration with all members in RCCD(n), deduplicated."""
    seen = {}
    for diagram in rccd(n, limit):
        for moving, (a, b) in enumerate(diagram.chords, start=1):
            for endpoint in (a, b):
                if endpoint == 1:
                    continue
                for pivot in range(1, diagram.n + 1):
                    if pivot == moving:
                        continue
                    quad = quad_at(diagram, moving, endpoint, pivot)
                    if quad is not None and quad.diagrams not in seen:
                        seen[quad.diagrams] = quad
    quads = sorted(seen.values(), key=lambda q: [d.pairing for d in q.diagrams])
    logger.info("found %d four-term configurations at n=%d", len(quads), n)
    return quads


def four_term_violations(n: int, k: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> List[FourTermQuad]:
    """Configurations whose alternating sum is nonzero under the constant map ``alpha = k``."""
    if k < 1:
        raise ChordError(f"alpha must be >= 1, got {k}")
    return [q for q in four_term_quads(n, limit) if four_term_sum(q, k)]


def violations_frame(quads: List[FourTermQuad], alpha: Alpha) -> pd.DataFrame:
    rows = []
    for q in quads:
        row = {slot: d.letters() for slot, d in zip(SLOTS, q.diagrams)}
        row["sum"] = poly_to_str(four_term_sum(q, alpha))
        rows.append(row)
    return pd.DataFrame(rows, columns=list(SLOTS) + ["sum"])
