"""The named families of rooted connected chord diagrams: cycloids, wheels, ladders and CW."""

from __future__ import annotations

from typing import Callable, Dict, List, Sequence

from chords.diagram import ChordDiagram
from chords.errors import ChordError


def _require_positive(name: str, value: int) -> int:
    value = int(value)
    if value < 1:
        raise ChordError(f"{name} must be a positive integer, got {value}")
    return value


def _cycloid_word(n: int) -> List[int]:
    # chord k joins endpoints 2k-2 and 2k+1, with the first and last chords clipped
    if n == 1:
        return [1, 1]
    pairs = [(1, 3)] + [(2 * k - 2, 2 * k + 1) for k in range(2, n)] + [(2 * n - 2, 2 * n)]
    word = [0] * (2 * n)
    for label, (a, b) in enumerate(pairs, start=1):
        word[a - 1] = word[b - 1] = label
    return word


def cycloid(n: int) -> ChordDiagram:
    """Cyc_n: chord i crosses only chords i - 1 and i + 1."""
    return ChordDiagram.from_word(_cycloid_word(_require_positive("n", n)))


def wheel(n: int) -> ChordDiagram:
    """W_n: every pair of chords crosses."""
    n = _require_positive("n", n)
    return ChordDiagram.from_chords((i, n + i) for i in range(1, n + 1))


def ladder(n: int) -> ChordDiagram:
    """L_n: the root chord crosses all others, which are nested and pairwise disjoint."""
    n = _require_positive("n", n)
    if n == 1:
        return ChordDiagram.single()
    return ChordDiagram.from_chords([(1, n + 1)] + [(k, 2 * n + 2 - k) for k in range(2, n + 1)])


def cw(betas: Sequence[int]) -> ChordDiagram:
    """
    CW_n(beta_1, ..., beta_n): a wheel with n spokes whose k-th spoke ends in the
    first interval of a cycloid block B_k with beta_k chords.
    """
    betas = [_require_positive("beta", b) for b in betas]
    if not betas:
        raise ChordError("cw needs at least one block size")
    word: List[object] = [("spoke", k) for k in range(1, len(betas) + 1)]
    for k, beta in enumerate(betas, start=1):
        block = [("block", k, c) for c in _cycloid_word(beta)]
        word.extend(block[:1] + [("spoke", k)] + block[1:])
    return ChordDiagram.from_word(word)


FAMILIES: Dict[str, Callable[..., ChordDiagram]] = {
    "cycloid": cycloid,
    "wheel": wheel,
    "ladder": ladder,
    "cw": cw,
}


def make_family(kind: str, params: Sequence[int]) -> ChordDiagram:
    """Build a family member; ``params`` is ``[n]`` for cycloid/wheel/ladder and the betas for cw."""
    if kind not in FAMILIES:
        raise ChordError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}")
    params = list(params)
    if kind == "cw":
        return cw(params)
    if len(params) != 1:
        raise ChordError(f"family {kind!r} takes exactly one size parameter, got {params}")
    return FAMILIES[kind](params[0])
