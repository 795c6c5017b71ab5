"""
Exact polynomials in the symbols ``f_0, f_1, f_2, ...``.

Polynomials are elements of a sparse sympy ``PolyRing`` over ``QQ`` with
``SYMBOL_COUNT`` generators ``f_0 .. f_23``, so sums over thousands of diagrams
stay cheap and every coefficient is an exact rational. Series orders above
``SYMBOL_COUNT`` need a larger ring and are rejected. ``f(j)`` for ``j < 0`` is
the zero polynomial; this is what the ``P(x)`` and four-term formulas need when
an index such as ``b(C) - 2`` drops below zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from chords.errors import ChordError, LimitExceededError, MissingSymbolError

SYMBOL_COUNT = 24

FRing, *_GENS = ring([f"f_{j}" for j in range(SYMBOL_COUNT)], QQ)

# Polynomials are plain ring elements; the alias names the role.
FPolynomial = PolyElement


def f(j: int) -> FPolynomial:
    """Return the generator ``f_j`` (zero for negative ``j``)."""
    if j < 0:
        return FRing.zero
    if j >= SYMBOL_COUNT:
        raise LimitExceededError("symbol index", j, SYMBOL_COUNT - 1)
    return _GENS[j]


def _ground(value):
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def constant(value) -> FPolynomial:
    """Lift an int or Fraction into the ring."""
    return FRing.ground_new(_ground(value))


def scale(p: FPolynomial, value) -> FPolynomial:
    return p * _ground(value)


def to_fraction(coeff) -> Fraction:
    """Convert a ground-domain coefficient of ``FRing`` to a Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def rational_str(value) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` for integers)."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    return Fraction(str(text).strip())


@dataclass(frozen=True, order=True)
class FMonomial:
    """A monomial ``f_0^{e_0} f_1^{e_1} ...`` stored as sorted ``(j, e_j)`` pairs, no zero exponents."""

    exponents: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "FMonomial":
        """Build the product of ``f_j`` over ``indices`` (with repetition)."""
        counts: Dict[int, int] = {}
        for j in indices:
            if j < 0:
                raise ChordError(f"monomial index must be >= 0, got {j}")
            counts[j] = counts.get(j, 0) + 1
        return cls.from_exponents(counts)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "FMonomial":
        items = tuple(sorted((int(j), int(e)) for j, e in exponents.items() if e))
        if any(j < 0 or e < 0 for j, e in items):
            raise ChordError(f"invalid exponent map {dict(exponents)}")
        return cls(items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    def exponent(self, j: int) -> int:
        return self.as_dict().get(j, 0)

    def __mul__(self, other: "FMonomial") -> "FMonomial":
        merged = self.as_dict()
        for j, e in other.exponents:
            merged[j] = merged.get(j, 0) + e
        return FMonomial.from_exponents(merged)

    def to_poly(self) -> FPolynomial:
        return math.prod((f(j) ** e for j, e in self.exponents), start=FRing.one)

    def to_json(self) -> Dict[str, int]:
        return {str(j): e for j, e in self.exponents}

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(f"f_{j}" if e == 1 else f"f_{j}^{e}" for j, e in self.exponents)


def _monomial_of(monom: Tuple[int, ...]) -> FMonomial:
    return FMonomial.from_exponents({j: e for j, e in enumerate(monom) if e})


def _sort_key(item: Tuple[FMonomial, Fraction]):
    m = item[0]
    dense = [0] * SYMBOL_COUNT
    for j, e in m.exponents:
        dense[j] = e
    return (m.degree, tuple(dense))


def poly_terms(p: FPolynomial) -> List[Tuple[FMonomial, Fraction]]:
    """Terms of ``p`` in graded lexicographic order of the exponent vector."""
    terms = [(_monomial_of(monom), to_fraction(coeff)) for monom, coeff in p.items()]
    return sorted(terms, key=_sort_key)


def poly_from_terms(terms: Iterable[Tuple[FMonomial, object]]) -> FPolynomial:
    out = FRing.zero
    for m, c in terms:
        out += scale(m.to_poly(), c)
    return out


def total_degree(p: FPolynomial) -> int:
    """Largest total degree among the terms (-1 for the zero polynomial)."""
    return max((sum(monom) for monom in p.keys()), default=-1)


def symbols_used(p: FPolynomial) -> List[int]:
    used = set()
    for monom in p.keys():
        used.update(j for j, e in enumerate(monom) if e)
    return sorted(used)


def substitute(p: FPolynomial, values: Mapping[int, object]) -> Fraction:
    """Evaluate ``p`` exactly at ``f_j = values[j]``; every symbol in ``p`` needs a value."""
    used = symbols_used(p)
    for j in used:
        if j not in values:
            raise MissingSymbolError(j)
    result = p.subs([(_GENS[j], _ground(values[j])) for j in used])
    return to_fraction(result.LC)


def poly_to_json(p: FPolynomial) -> List[Dict[str, object]]:
    return [{"m": m.to_json(), "c": rational_str(c)} for m, c in poly_terms(p)]


def poly_from_json(items: Iterable[Mapping[str, object]]) -> FPolynomial:
    terms = []
    for item in items:
        exps = {int(j): int(e) for j, e in dict(item["m"]).items()}
        terms.append((FMonomial.from_exponents(exps), parse_rational(item["c"])))
    return poly_from_terms(terms)


def poly_to_str(p: FPolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for m, c in poly_terms(p):
        if m.degree == 0:
            parts.append(rational_str(c))
        elif c == 1:
            parts.append(str(m))
        elif c == -1:
            parts.append(f"-{m}")
        else:
            parts.append(f"{rational_str(c)}*{m}")
    return " + ".join(parts).replace("+ -", "- ")
