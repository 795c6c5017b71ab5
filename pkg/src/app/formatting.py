"""Text rendering for the CLI: diagrams, stats, series, reports and frames."""

import pandas as pd

from chords.diagram import ChordDiagram, intersection_graph
from chords.order import stats
from chords.trees import to_tree
from pipeline.reports import CheckReport
from symbolic.series import XSeries


def render_frame(df: pd.DataFrame) -> str:
    if df.empty:
        return "No data."
    return df.to_string(index=False)


def render_diagram(diagram: ChordDiagram) -> str:
    return f"{diagram.letters()}  [{' '.join(str(p) for p in diagram.pairing)}]"


def render_stats(diagram: ChordDiagram) -> str:
    s = stats(diagram)
    edges = sorted(intersection_graph(diagram).edges)
    lines = [
        f"diagram   : {render_diagram(diagram)}",
        f"n         : {diagram.n}",
        f"edges     : {' '.join(f'{i}->{j}' for i, j in edges) or '-'}",
        f"sigma     : {' '.join(map(str, s.sigma))}",
        f"terminal  : {' '.join(map(str, s.terminal))}",
        f"b         : {s.b}",
        f"delta     : {' '.join(map(str, s.delta)) or '-'}",
        f"delta_bar : {' '.join(map(str, s.delta_bar)) or '-'}",
        f"f_C       : {s.monomial}",
        f"T(C)      : {to_tree(diagram)}",
    ]
    return "\n".join(lines)


def render_series(name: str, series: XSeries) -> str:
    return f"{name} (order {series.order})\n{series}"


def render_report(report: CheckReport, limit: int = 10) -> str:
    lines = [report.summary()]
    for v in report.violations[:limit]:
        lines.append(f"  violation: {v}")
    if len(report.violations) > limit:
        lines.append(f"  ... {len(report.violations) - limit} more")
    for n in report.notes[:limit]:
        lines.append(f"  note: {n}")
    return "\n".join(lines)
