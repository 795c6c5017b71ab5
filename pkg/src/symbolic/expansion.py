"""
Chord diagram expansions, summed directly over RCCD(n):

- ``g_k = sum_{b(C) >= k} x^|C| f_C f_{b(C)-k}``
- ``gamma_k = (-1)^k / k! * g_k``
- ``P(x) = sum_C x^|C| f_C (f_{b(C)-2} - f_{b(C)-1})``
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, rccd
from chords.errors import ChordError, LimitExceededError
from chords.order import stats
from symbolic.polynomial import FPolynomial, FRing, f
from symbolic.series import GreenFunction, XSeries

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def diagram_terms(n: int) -> Tuple[Tuple[int, FPolynomial], ...]:
    """``(b(C), f_C)`` for every C in RCCD(n)."""
    out = []
    for diagram in rccd(n, limit=n):
        s = stats(diagram)
        out.append((s.b, s.monomial.to_poly()))
    logger.debug("collected %d diagram terms at n=%d", len(out), n)
    return tuple(out)


def _check_order(order: int, limit: int) -> None:
    if order < 1:
        raise ChordError(f"order must be >= 1, got {order}")
    if order > limit:
        raise LimitExceededError("order", order, limit)


def g_series(k: int, order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> XSeries:
    if k < 1:
        raise ChordError(f"k must be >= 1, got {k}")
    _check_order(order, limit)
    coeffs = {}
    for n in range(k, order + 1):
        total = FRing.zero
        for b, monomial in diagram_terms(n):
            if b >= k:
                total += monomial * f(b - k)
        coeffs[n] = total
    return XSeries.from_dict(order, coeffs)


def gamma_factor(k: int) -> Fraction:
    return Fraction((-1) ** k, math.factorial(k))


def gamma_series(k: int, order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> XSeries:
    return g_series(k, order, limit).scale(gamma_factor(k))


def p_series(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> XSeries:
    """P(x), with ``f_{-1} = 0`` for the single chord."""
    _check_order(order, limit)
    coeffs = {}
    for n in range(1, order + 1):
        total = FRing.zero
        for b, monomial in diagram_terms(n):
            total += monomial * (f(b - 2) - f(b - 1))
        coeffs[n] = total
    return XSeries.from_dict(order, coeffs)


def green_function(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> GreenFunction:
    return GreenFunction(order, {k: gamma_series(k, order, limit) for k in range(1, order + 1)})
