"""
Order-by-order solution of the Dyson-Schwinger equation without enumerating diagrams.

``[x^{i+1}] g_1 = sum_j f_j F_{i,j}`` with

    F_{i,0} = [i == 0]
    F_{i,j} = sum_{k=1..i} sum_{l=1..j} binom(j, l) [x^k] g_l * F_{i-k, j-l}

and ``g_k = g_1 * theta(g_{k-1})``. Each step only needs lower x-powers.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from chords.errors import ChordError, LimitExceededError
from symbolic.expansion import gamma_factor
from symbolic.polynomial import SYMBOL_COUNT, FPolynomial, FRing, f, scale
from symbolic.series import GreenFunction, XSeries

logger = logging.getLogger(__name__)


class DseSolver:
    """Holds ``[x^n] g_k`` and ``F_{i,j}`` tables, filled one x-power at a time."""

    def __init__(self, order: int) -> None:
        if order < 1:
            raise ChordError(f"order must be >= 1, got {order}")
        if order > SYMBOL_COUNT:
            raise LimitExceededError("order", order, SYMBOL_COUNT)
        self.order = order
        # g[k][n] = [x^n] g_k, for 1 <= k, n <= order
        self.g: Dict[int, List[FPolynomial]] = {k: [FRing.zero] * (order + 1) for k in range(1, order + 1)}
        self.F: Dict[Tuple[int, int], FPolynomial] = {(0, 0): FRing.one}
        self._solved = 0

    def F_value(self, i: int, j: int) -> FPolynomial:
        if i < 0 or j < 0:
            return FRing.zero
        if j == 0:
            return FRing.one if i == 0 else FRing.zero
        if j > i:
            return FRing.zero
        key = (i, j)
        if key not in self.F:
            if i > self._solved:
                raise ChordError(f"F_{{{i},{j}}} needs g up to x^{i}, solved only to x^{self._solved}")
            total = FRing.zero
            for k in range(1, i + 1):
                for l in range(1, j + 1):
                    coeff = self.g[l][k] if l <= self.order else FRing.zero
                    if not coeff:
                        continue
                    rest = self.F_value(i - k, j - l)
                    if rest:
                        total += scale(coeff * rest, comb(j, l))
            self.F[key] = total
        return self.F[key]

    def _step(self, n: int) -> None:
        i = n - 1
        self.g[1][n] = sum((f(j) * self.F_value(i, j) for j in range(0, i + 1)), FRing.zero)
        for k in range(2, n + 1):
            total = FRing.zero
            for a in range(1, n):
                head = self.g[1][a]
                tail = self.g[k - 1][n - a]
                if head and tail:
                    total += head * scale(tail, 2 * (n - a) - 1)
            self.g[k][n] = total
        self._solved = n

    def solve(self) -> "DseSolver":
        for n in range(self._solved + 1, self.order + 1):
            self._step(n)
            logger.debug("solved x^%d", n)
        return self

    def g_series(self, k: int) -> XSeries:
        self.solve()
        if not 1 <= k <= self.order:
            return XSeries.zero(self.order)
        return XSeries(self.order, tuple(self.g[k]))

    def gamma_series(self, k: int) -> XSeries:
        return self.g_series(k).scale(gamma_factor(k))


def solve_dse(order: int) -> GreenFunction:
    solver = DseSolver(order).solve()
    return GreenFunction(order, {k: solver.gamma_series(k) for k in range(1, order + 1)})


def F_recurrence(i: int, j: int, order: int) -> FPolynomial:
    """``F_{i,j}`` from the recurrence, with g taken from the solver."""
    solver = DseSolver(max(order, i, 1)).solve()
    return solver.F_value(i, j)


def gamma_by_recurrence(k: int, gamma_1: XSeries) -> XSeries:
    """``gamma_k = (1/k) gamma_1 theta(gamma_{k-1})``, starting from a given ``gamma_1``."""
    if k < 1:
        raise ChordError(f"k must be >= 1, got {k}")
    current = gamma_1
    for step in range(2, k + 1):
        current = (gamma_1 * current.theta()).scale(Fraction(1, step))
    return current
