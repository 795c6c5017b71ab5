"""
Verification of the series identities behind the DSE solution.

The diagram side always comes from summing over RCCD(n). The operator side
(``F_oracle``) iterates ``G_rho = sum_l g_l (1/l!) d^l/drho^l`` literally on
polynomials in ``rho``; the recurrence side comes from ``DseSolver``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Mapping

from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, nijenhuis_wilf_recurrence, stein_recurrence
from chords.errors import ChordError, LimitExceededError
from pipeline.reports import CheckReport
from symbolic.dse_solver import DseSolver, gamma_by_recurrence
from symbolic.expansion import diagram_terms, g_series, gamma_series, p_series
from symbolic.polynomial import FPolynomial, FRing, f, poly_to_str, scale, substitute, symbols_used
from symbolic.series import XSeries

logger = logging.getLogger(__name__)


@dataclass
class RhoPolynomial:
    """``sum_j c_j(x) rho^j`` with truncated x-series coefficients."""

    order: int
    terms: Dict[int, XSeries] = field(default_factory=dict)

    @classmethod
    def rho_power(cls, j: int, order: int, coeff: FPolynomial = None) -> "RhoPolynomial":
        c = FRing.one if coeff is None else coeff
        return cls(order, {j: XSeries.monomial(order, 0, c)})

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.terms.values())

    def degree(self) -> int:
        return max((j for j, s in self.terms.items() if not s.is_zero()), default=-1)

    def __add__(self, other: "RhoPolynomial") -> "RhoPolynomial":
        out = dict(self.terms)
        for j, s in other.terms.items():
            out[j] = out[j] + s if j in out else s
        return RhoPolynomial(min(self.order, other.order), out)

    def apply_operator(self, g: Mapping[int, XSeries]) -> "RhoPolynomial":
        """One application of ``G_rho``: ``rho^j -> sum_l binom(j, l) g_l rho^(j-l)``."""
        out: Dict[int, XSeries] = {}
        for j, coeff in self.terms.items():
            if coeff.is_zero():
                continue
            for l in range(1, j + 1):
                if l not in g:
                    continue
                term = (g[l] * coeff).scale(comb(j, l))
                if term.is_zero():
                    continue
                out[j - l] = out[j - l] + term if j - l in out else term
        return RhoPolynomial(self.order, out)

    def at_zero(self) -> XSeries:
        return self.terms.get(0, XSeries.zero(self.order))


def operator_series(start: RhoPolynomial, g: Mapping[int, XSeries]) -> XSeries:
    """``sum_{n >= 0} G_rho^n (start)`` at ``rho = 0``."""
    total = start
    state = start
    steps = 0
    while not state.is_zero():
        state = state.apply_operator(g)
        total = total + state
        steps += 1
        if steps > start.degree() + 1:
            raise ChordError("operator iteration did not terminate")
    return total.at_zero()


def diagram_g(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> Dict[int, XSeries]:
    return {k: g_series(k, order, limit) for k in range(1, order + 1)}


def F_oracle(i: int, j: int, g: Mapping[int, XSeries] = None, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> FPolynomial:
    """``[x^i] sum_n G_rho^n rho^j |_{rho=0}`` by literal operator iteration."""
    if i < 0 or j < 0:
        raise ChordError(f"F needs i, j >= 0, got ({i}, {j})")
    if g is None:
        g = diagram_g(max(i, 1), limit)
    order = min(s.order for s in g.values())
    if i > order:
        raise LimitExceededError("F index i", i, order)
    return operator_series(RhoPolynomial.rho_power(j, order), g).coefficient(i)


def F_enumerated(i: int, j: int) -> FPolynomial:
    """``sum f_C`` over RCCD(i + 1) with ``b(C) = j + 1``."""
    return sum((m for b, m in diagram_terms(i + 1) if b == j + 1), FRing.zero)


def check_f_oracle(i_max: int, j_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    report = CheckReport("F oracle")
    order = max(i_max, 1)
    if order + 1 > limit:
        raise LimitExceededError("i_max + 1", order + 1, limit)
    g = diagram_g(order, limit)
    solver = DseSolver(order).solve()
    for i in range(0, i_max + 1):
        for j in range(0, j_max + 1):
            oracle = F_oracle(i, j, g)
            recur = solver.F_value(i, j)
            enum = F_enumerated(i, j)
            report.record(
                oracle == recur == enum,
                i=i, j=j, oracle=poly_to_str(oracle), recurrence=poly_to_str(recur), enumerated=poly_to_str(enum),
            )
    logger.info(report.summary())
    return report


def _compare(report: CheckReport, label: str, lhs: XSeries, rhs: XSeries, **context) -> None:
    for power in range(0, min(lhs.order, rhs.order) + 1):
        diff = lhs.coefficient(power) - rhs.coefficient(power)
        report.record(not diff, what=label, power=power, residual=poly_to_str(diff), **context)


def check_main_theorem(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """``g_1 = x f_0 + x sum_{n>=1} G_rho^n (f_0 + f_1 rho + ...) |_{rho=0}``, residual per x-power."""
    report = CheckReport("main theorem")
    g = diagram_g(order, limit)
    inner_order = max(order - 1, 0)
    start = RhoPolynomial(
        inner_order,
        {j: XSeries.monomial(inner_order, 0, f(j)) for j in range(0, inner_order + 1)},
    )
    g_inner = {k: s.truncate(inner_order) for k, s in g.items()}
    inner = operator_series(start, g_inner)
    operator_side = XSeries(order, (FRing.zero,) + inner.coeffs)
    _compare(report, "g_1", g[1], operator_side)
    logger.info(report.summary())
    return report


def check_gamma_recurrence(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    report = CheckReport("gamma recurrence")
    g = diagram_g(order, limit)
    for k in range(2, order + 1):
        _compare(report, "g_k = g_1 theta g_{k-1}", g[k], g[1] * g[k - 1].theta(), k=k)
        for i in range(1, order + 1):
            spread = sum(
                (scale(g[1].coefficient(i - l) * g[k - 1].coefficient(l), 2 * l - 1) for l in range(1, i)),
                FRing.zero,
            )
            diff = g[k].coefficient(i) - spread
            report.record(not diff, what="spread-out form", k=k, power=i, residual=poly_to_str(diff))
    gamma_1 = gamma_series(1, order, limit)
    for k in range(2, order + 1):
        _compare(report, "gamma_k = (1/k) gamma_1 theta gamma_{k-1}", gamma_series(k, order, limit),
                 gamma_by_recurrence(k, gamma_1), k=k)

    # all f_j = 1: g_1 counts diagrams and g_2 = g_1 theta g_1 is the Nijenhuis-Wilf sum
    ones = {j: 1 for j in range(order + 1)}
    counts = stein_recurrence(order)
    nw = nijenhuis_wilf_recurrence(order)
    g1_counts = g[1].substitute(ones)
    g2_counts = g[2].substitute(ones) if order >= 2 else []
    for n in range(1, order + 1):
        report.record(g1_counts[n] == counts[n - 1], what="g_1 at f=1", power=n, got=str(g1_counts[n]), expected=counts[n - 1])
        if n >= 2:
            report.record(g2_counts[n] == nw[n - 1], what="g_2 at f=1", power=n, got=str(g2_counts[n]), expected=nw[n - 1])
    logger.info(report.summary())
    return report


def check_solver_agreement(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """The enumeration-free solver reproduces every diagram sum ``g_k`` up to ``x^order``."""
    report = CheckReport("solver vs diagram sums")
    solver = DseSolver(order).solve()
    g = diagram_g(order, limit)
    for k in range(1, order + 1):
        _compare(report, "g_k", g[k], solver.g_series(k), k=k)
    logger.info(report.summary())
    return report


def check_second_rec(i_max: int, j_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """
    For ``i, j >= 1``: ``sum_{|C|=i+1, b(C)=j+1} f_C`` equals
    ``sum_k sum_l binom(j, l) [x^k] g_l * sum_{|C|=i-k+1, b(C)=j-l+1} f_C``.
    """
    report = CheckReport("second recurrence")
    if i_max + 1 > limit:
        raise LimitExceededError("i_max + 1", i_max + 1, limit)
    g = diagram_g(max(i_max, 1), limit)
    for i in range(1, i_max + 1):
        for j in range(1, j_max + 1):
            lhs = F_enumerated(i, j)
            rhs = FRing.zero
            for k in range(1, i + 1):
                for l in range(1, j + 1):
                    coeff = g[l].coefficient(k) if l in g else FRing.zero
                    if coeff:
                        rhs += scale(coeff * F_enumerated(i - k, j - l), comb(j, l))
            diff = lhs - rhs
            report.record(not diff, i=i, j=j, residual=poly_to_str(diff))
    logger.info(report.summary())
    return report


def check_p_series(order: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """``P(x) = g_2 - g_1`` under ``f_{-1} = 0``; the sum restricted to ``b >= 2`` differs only at ``x^1``."""
    report = CheckReport("P(x)")
    p = p_series(order, limit)
    solver = DseSolver(order).solve()
    expected = solver.g_series(2) - solver.g_series(1)
    _compare(report, "P = g_2 - g_1", p, expected)
    restricted = p + XSeries.monomial(order, 1, f(0))
    report.note(reading="sum over b >= 2", x1=poly_to_str(restricted.coefficient(1)), x1_default=poly_to_str(p.coefficient(1)))
    logger.info(report.summary())
    return report


def substituted(series: XSeries, values: Mapping[int, object]) -> Dict[int, str]:
    """Coefficients of ``series`` with every used symbol substituted."""
    out = {}
    for n, c in series.nonzero_terms():
        missing = [j for j in symbols_used(c) if j not in values]
        if missing:
            raise ChordError(f"no value for f_{missing[0]}")
        out[n] = str(substitute(c, values))
    return out
