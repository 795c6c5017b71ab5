"""
Enumeration of rooted connected chord diagrams.

Two independent generators:

- ``enumerate_constructive``: every RCCD(n) as ``insert(C1, C2, i)`` with
  ``|C1| + |C2| = n``; each diagram comes out exactly once because the
  root-share decomposition is unique.
- ``enumerate_bruteforce``: all ``(2n-1)!!`` perfect matchings, filtered by
  connectivity. Used as the oracle for the constructive generator.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import pandas as pd

from chords.diagram import ChordDiagram, canonical_sort, insert
from chords.errors import ChordError, LimitExceededError
from chords.order import stats

logger = logging.getLogger(__name__)

DEFAULT_BRUTEFORCE_LIMIT = 7
DEFAULT_CONSTRUCTIVE_LIMIT = 8


def _require_size(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ChordError(f"n must be >= 1, got {n}")
    return n


def double_factorial(m: int) -> int:
    """``m!!`` for odd or even ``m >= -1``."""
    return math.prod(range(m, 0, -2))


def _matchings(points: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
    # pair the smallest unpaired point first, so every matching appears once
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _matchings(remaining):
            yield [(first, partner)] + tail


def all_matchings(n: int) -> Iterator[ChordDiagram]:
    """Every perfect matching on ``2n`` points, connected or not."""
    for chords in _matchings(tuple(range(1, 2 * n + 1))):
        yield ChordDiagram.from_chords(chords)


def enumerate_bruteforce(n: int, limit: int = DEFAULT_BRUTEFORCE_LIMIT) -> FrozenSet[ChordDiagram]:
    n = _require_size(n)
    if n > limit:
        raise LimitExceededError("bruteforce n", n, limit)
    total = 0
    found = set()
    for diagram in all_matchings(n):
        total += 1
        if diagram.is_connected:
            found.add(diagram)
    logger.debug("bruteforce n=%d: %d matchings, %d connected", n, total, len(found))
    return frozenset(found)


@lru_cache(maxsize=None)
def _constructive(n: int) -> FrozenSet[ChordDiagram]:
    if n == 1:
        return frozenset([ChordDiagram.single()])
    found = set()
    produced = 0
    for inner_size in range(1, n):
        host_size = n - inner_size
        for inner in _constructive(inner_size):
            for host in _constructive(host_size):
                for interval in range(1, 2 * host_size):
                    found.add(insert(inner, host, interval))
                    produced += 1
    if produced != len(found):
        raise AssertionError(f"constructive enumeration produced duplicates at n={n}")
    logger.debug("constructive n=%d: %d diagrams", n, len(found))
    return frozenset(found)


def enumerate_constructive(n: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> FrozenSet[ChordDiagram]:
    n = _require_size(n)
    if n > limit:
        raise LimitExceededError("constructive n", n, limit)
    return _constructive(n)


def rccd(n: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> List[ChordDiagram]:
    """RCCD(n) in canonical order."""
    return canonical_sort(enumerate_constructive(n, limit))


def stein_recurrence(N: int) -> List[int]:
    """c_1..c_N from ``c_n = (n - 1) * sum_k c_k c_{n-k}``."""
    c = [0, 1]
    for n in range(2, N + 1):
        c.append((n - 1) * sum(c[k] * c[n - k] for k in range(1, n)))
    return c[1:N + 1]


def nijenhuis_wilf_recurrence(N: int) -> List[int]:
    """c_1..c_N from ``c_n = sum_k (2k - 1) c_k c_{n-k}``."""
    c = [0, 1]
    for n in range(2, N + 1):
        c.append(sum((2 * k - 1) * c[k] * c[n - k] for k in range(1, n)))
    return c[1:N + 1]


def counts_by_b(n: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> List[int]:
    """``[c_{n,1}, ..., c_{n,n}]`` with ``c_{n,k} = #{C in RCCD(n) : b(C) >= k}``."""
    exact = [0] * (n + 2)
    for diagram in enumerate_constructive(n, limit):
        exact[stats(diagram).b] += 1
    out = []
    running = 0
    for k in range(n, 0, -1):
        running += exact[k]
        out.append(running)
    return out[::-1]


@dataclass
class CountTable:
    counts: List[int]
    nijenhuis_wilf: List[int]
    by_b: Dict[int, List[int]] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return len(self.counts)

    @property
    def recurrences_agree(self) -> bool:
        return self.counts == self.nijenhuis_wilf

    def c(self, n: int, k: int = 1) -> Optional[int]:
        if k == 1:
            return self.counts[n - 1]
        row = self.by_b.get(n)
        if row is None:
            return None
        return row[k - 1] if k <= len(row) else 0

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for n in range(1, self.N + 1):
            row = {
                "n": n,
                "c_n": self.counts[n - 1],
                "c_n_nw": self.nijenhuis_wilf[n - 1],
                "double_factorial": double_factorial(2 * n - 1),
                "bound_2n_nfact": 2 ** n * math.factorial(n),
            }
            for k in range(1, self.N + 1):
                by_b = self.by_b.get(n)
                if by_b is not None:
                    row[f"c_n_{k}"] = by_b[k - 1] if k <= n else 0
            rows.append(row)
        return pd.DataFrame(rows)

    def to_json(self) -> Dict[str, object]:
        return {
            "counts": self.counts,
            "nijenhuis_wilf": self.nijenhuis_wilf,
            "counts_by_b": {str(n): row for n, row in sorted(self.by_b.items())},
        }


def stein_counts(N: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CountTable:
    """Both count recurrences up to ``N``; the ``c_{n,k}`` rows come from enumeration for ``n <= limit``."""
    N = _require_size(N)
    table = CountTable(counts=stein_recurrence(N), nijenhuis_wilf=nijenhuis_wilf_recurrence(N))
    for n in range(1, min(N, limit) + 1):
        table.by_b[n] = counts_by_b(n, limit)
    if not table.recurrences_agree:
        logger.warning("count recurrences disagree up to N=%d", N)
    return table
