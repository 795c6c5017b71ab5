"""
Growth of ``gamma_k`` under ``f_j = C^{j+1}``.

Under that substitution every diagram contributes ``C^{2n-k}`` to ``g_{k,n}``,
so ``|gamma_{k,n}| = c_{n,k} C^{2n-k} / k!`` and the count bound
``c_{n,k} <= (2n-1)!! <= 2^n n!`` gives ``|gamma_{k,n}| <= C^{-k}/k! (2C^2)^n n!``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

import pandas as pd

from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, counts_by_b, double_factorial
from chords.errors import ChordError
from pipeline.reports import CheckReport
from symbolic.dse_solver import DseSolver
from symbolic.polynomial import substitute

logger = logging.getLogger(__name__)

COUNT_LIMIT = 7


@dataclass
class GevreyResult:
    report: CheckReport
    table: pd.DataFrame
    growth: float

    def to_json(self) -> Dict[str, object]:
        data = self.report.to_json()
        data["growth"] = self.growth
        data["table"] = self.table.to_dict(orient="records")
        return data


def gevrey_check(
    c_bound,
    k: int,
    order: int,
    count_limit: int = COUNT_LIMIT,
    limit: int = DEFAULT_CONSTRUCTIVE_LIMIT,
) -> GevreyResult:
    c_bound = Fraction(c_bound)
    if c_bound <= 0:
        raise ChordError(f"C must be positive, got {c_bound}")
    if k < 1 or order < k:
        raise ChordError(f"need 1 <= k <= order, got k={k}, order={order}")

    report = CheckReport(f"gevrey k={k} C={c_bound}")
    solver = DseSolver(order).solve()
    values = {j: c_bound ** (j + 1) for j in range(order + 1)}
    norm = Fraction(1, math.factorial(k))

    rows = []
    growth = 0.0
    for n in range(k, order + 1):
        g_value = substitute(solver.g_series(k).coefficient(n), values)
        gamma = abs(g_value) * norm
        ratio = gamma / math.factorial(n)
        bound = c_bound ** (-k) * norm * (2 * c_bound ** 2) ** n * math.factorial(n)
        report.record(gamma <= bound, what="gamma bound", n=n, gamma=str(gamma), bound=str(bound))

        count: Optional[int] = None
        if n <= min(count_limit, limit):
            count = counts_by_b(n, limit)[k - 1]
            report.record(
                g_value == count * c_bound ** (2 * n - k),
                what="count identity", n=n, g=str(g_value), count=count,
            )
            report.record(
                count <= double_factorial(2 * n - 1) <= 2 ** n * math.factorial(n),
                what="count bound", n=n, count=count,
            )
        if ratio > 0:
            growth = max(growth, float(ratio) ** (1.0 / n))
        rows.append(
            {
                "n": n,
                "c_nk": count,
                "gamma": float(gamma),
                "ratio": float(ratio),
                "bound_ratio": float(gamma / bound),
            }
        )
    table = pd.DataFrame(rows)
    if growth > 0:
        table["scaled"] = [r / growth ** n for r, n in zip(table["ratio"], table["n"])]
    logger.info("%s, fitted growth %.4f", report.summary(), growth)
    return GevreyResult(report=report, table=table, growth=growth)
