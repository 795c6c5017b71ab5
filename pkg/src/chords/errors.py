"""Error types raised by the chord diagram and series code."""

from __future__ import annotations

from typing import Optional, Tuple


class ChordError(ValueError):
    """Base class for invalid input to the chord diagram library."""


class InvalidPairingError(ChordError):
    """The endpoint array is not a fixed-point-free involution on 1..2n."""


class DisconnectedDiagramError(ChordError):
    """An operation that needs a connected diagram received a disconnected one."""


class IntervalError(ChordError):
    """An interval or edge index is outside 1..2n-1."""


class LimitExceededError(ChordError):
    """A size or order is above the configured enumeration limit."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        super().__init__(f"{what}={value} exceeds the configured limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class TreeImageError(ChordError):
    """A labelled tree is not the image of a rooted connected chord diagram."""

    def __init__(self, message: str, vertex: Optional[Tuple[str, ...]] = None) -> None:
        where = "root" if not vertex else "".join(vertex)
        super().__init__(f"{message} (vertex: {where})")
        self.reason = message
        self.vertex = vertex


class MissingSymbolError(ChordError):
    """A numeric substitution did not provide a value for some f_j."""

    def __init__(self, index: int) -> None:
        super().__init__(f"no value given for symbol f_{index}")
        self.index = index
