"""
Main entry point for the chord diagram expansion toolkit.

Subcommands:

1. ``enumerate``  list RCCD(n), constructively, by brute force, or both compared.
2. ``counts``     count table: both count recurrences, c_{n,k} and the bounds.
3. ``stats``      statistics and T(C) of one diagram (a family member or a pairing).
4. ``table``      the diagram <-> tree table up to n chords.
5. ``gamma``      the series gamma_k up to x^order, optionally with numeric f_j.
6. ``pseries``    the series P(x).
7. ``verify``     ``dse``, ``recurrences``, ``bijection`` or ``lemmas``.
8. ``fourterm``   four-term configurations with a nonzero sum for constant alpha.
9. ``gevrey``     growth of gamma_k under f_j = C^(j+1).

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

import pandas as pd

from app.formatting import render_diagram, render_frame, render_report, render_series, render_stats
from app.utils_config import RunConfig, build_run_config, load_settings
from app.utils_io import dump_json, write_csv, write_json
from chords.diagram import ChordDiagram, canonical_sort
from chords.enumeration import enumerate_bruteforce, enumerate_constructive, stein_counts
from chords.errors import ChordError
from chords.families import FAMILIES, make_family
from chords.order import stats_json
from chords.trees import to_tree, tree_to_json
from pipeline.build_table import build_table
from pipeline.four_term import four_term_sum, four_term_violations, violations_frame
from pipeline.gevrey import gevrey_check
from pipeline.reports import CheckReport
from pipeline.verify_dse import (
    check_f_oracle,
    check_gamma_recurrence,
    check_main_theorem,
    check_p_series,
    check_second_rec,
    check_solver_agreement,
    substituted,
)
from pipeline.verify_lemmas import check_bijection, check_delta_concat, check_old_claims, check_shuffle_counts
from symbolic.dse_solver import DseSolver
from symbolic.expansion import gamma_series, p_series
from symbolic.polynomial import parse_rational

logger = logging.getLogger("app")

SHUFFLE_LIMIT = 5
COUNTS_BY_B_LIMIT = 7
OK, FAILED, USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chords", description="Rooted connected chord diagrams and the DSE expansion.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--bruteforce-limit", type=int, default=None, dest="bruteforce_limit")
    parser.add_argument("--constructive-limit", type=int, default=None, dest="constructive_limit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default=None)

    p = sub.add_parser("enumerate", help="List RCCD(n)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--method", choices=["constructive", "bruteforce", "both"], default="constructive")
    common(p)

    p = sub.add_parser("counts", help="Count table up to n")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--csv", nargs="?", const="", default=None)
    common(p)

    p = sub.add_parser("stats", help="Statistics of one diagram")
    p.add_argument("--family", choices=sorted(FAMILIES), default=None)
    p.add_argument("--params", type=int, nargs="+", default=None)
    p.add_argument("--pairing", type=int, nargs="+", default=None)
    common(p)

    p = sub.add_parser("table", help="Diagram <-> tree table")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--csv", nargs="?", const="", default=None)
    common(p)

    p = sub.add_parser("gamma", help="gamma_k as an x-series")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--method", choices=["sum", "solver"], default="sum")
    p.add_argument("--fvals", default=None, help="JSON file mapping j to a rational value of f_j")
    common(p)

    p = sub.add_parser("pseries", help="The series P(x)")
    p.add_argument("--order", type=int, default=None)
    common(p)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("action", choices=["dse", "recurrences", "bijection", "lemmas"])
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--report", default=None)
    common(p)

    p = sub.add_parser("fourterm", help="Four-term counterexample search")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha", type=int, default=1, dest="k")
    p.add_argument("--report", default=None)
    p.add_argument("--csv", nargs="?", const="", default=None)
    common(p)

    p = sub.add_parser("gevrey", help="Gevrey growth check")
    p.add_argument("--c", default="1")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--csv", nargs="?", const="", default=None)
    common(p)
    return parser


def setup_logging(level: str) -> None:
    logging.basicConfig(level=level, format="[%(levelname)s] %(message)s", stream=sys.stderr, force=True)


def _emit(config: RunConfig, text: str, data) -> None:
    print(dump_json(data) if config.format == "json" else text)


def _csv_path(config: RunConfig, default_name: str) -> Optional[str]:
    if config.csv is None:
        return None
    return config.csv or str(Path(config.extra["output_dir"]) / default_name)


def _write_table(config: RunConfig, df: pd.DataFrame, default_name: str) -> None:
    path = _csv_path(config, default_name)
    if path:
        write_csv(df, path)
        logger.info("Wrote %s", path)


def run_enumerate(config: RunConfig) -> int:
    n = config.n
    found = {}
    if config.method in ("constructive", "both"):
        found["constructive"] = enumerate_constructive(n, config.constructive_limit)
    if config.method in ("bruteforce", "both"):
        found["bruteforce"] = enumerate_bruteforce(n, config.bruteforce_limit)
    diagrams = canonical_sort(next(iter(found.values())))
    logger.info("RCCD(%d): %d diagrams", n, len(diagrams))
    agree = len(set(found.values())) == 1
    if not agree:
        logger.error("constructive (%d) and bruteforce (%d) sets differ",
                     len(found["constructive"]), len(found["bruteforce"]))
    text = "\n".join([f"count: {len(diagrams)}"] + [render_diagram(d) for d in diagrams])
    data = {"n": n, "count": len(diagrams), "agree": agree, "diagrams": [d.to_json() for d in diagrams]}
    _emit(config, text, data)
    return OK if agree else FAILED


def run_counts(config: RunConfig) -> int:
    table = stein_counts(config.n, min(config.n, config.constructive_limit, COUNTS_BY_B_LIMIT))
    df = table.to_frame()
    _write_table(config, df, f"counts_n{config.n}.csv")
    _emit(config, render_frame(df), table.to_json())
    return OK if table.recurrences_agree else FAILED


def _diagram_from_config(config: RunConfig) -> ChordDiagram:
    if config.pairing:
        return ChordDiagram(config.pairing)
    if config.family:
        return make_family(config.family, config.params)
    raise ChordError("stats needs --pairing or --family with --params")


def run_stats(config: RunConfig) -> int:
    diagram = _diagram_from_config(config)
    data = stats_json(diagram)
    data["tree"] = tree_to_json(to_tree(diagram))
    _emit(config, render_stats(diagram), data)
    return OK


def run_table(config: RunConfig) -> int:
    df = build_table(config.n, limit=config.constructive_limit)
    _write_table(config, df, f"diagram_tree_table_n{config.n}.csv")
    _emit(config, render_frame(df), df.to_dict(orient="records"))
    return OK


def _load_fvals(path: str) -> Dict[int, object]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return {int(j): parse_rational(v) for j, v in raw.items()}


def run_gamma(config: RunConfig) -> int:
    if config.method == "solver":
        series = DseSolver(config.order).solve().gamma_series(config.k)
    else:
        series = gamma_series(config.k, config.order, config.constructive_limit)
    name = f"gamma_{config.k}"
    if config.fvals:
        values = substituted(series, _load_fvals(config.fvals))
        text = "\n".join(f"[x^{n}] {v}" for n, v in values.items()) or "0"
        _emit(config, f"{name} (order {config.order})\n{text}", {"order": config.order, "values": {str(n): v for n, v in values.items()}})
        return OK
    _emit(config, render_series(name, series), series.to_json())
    return OK


def run_pseries(config: RunConfig) -> int:
    series = p_series(config.order, config.constructive_limit)
    _emit(config, render_series("P", series), series.to_json())
    return OK


def _verify_reports(config: RunConfig) -> List[CheckReport]:
    limit = config.constructive_limit
    order = config.order
    if config.action == "dse":
        return [
            check_main_theorem(order, limit),
            check_f_oracle(order - 1, order - 1, limit),
            check_solver_agreement(order, limit),
            check_p_series(order, limit),
        ]
    if config.action == "recurrences":
        return [check_gamma_recurrence(order, limit), check_second_rec(order - 1, order - 1, limit)]
    if config.action == "bijection":
        return [check_bijection(config.n, limit)]
    return [
        check_delta_concat(config.n, limit),
        check_old_claims(config.n, limit),
        check_shuffle_counts(min(config.n, SHUFFLE_LIMIT), limit),
    ]


def run_verify(config: RunConfig) -> int:
    reports = _verify_reports(config)
    passed = all(r.passed for r in reports)
    if config.report:
        write_json({"passed": passed, "reports": [r.to_json() for r in reports]}, config.report)
        logger.info("Wrote %s", config.report)
    text = "\n".join(render_report(r) for r in reports)
    _emit(config, text, {"passed": passed, "reports": [r.to_json() for r in reports]})
    return OK if passed else FAILED


def run_fourterm(config: RunConfig) -> int:
    quads = four_term_violations(config.n, config.k, config.constructive_limit)
    df = violations_frame(quads, config.k)
    data = {
        "n": config.n,
        "alpha": config.k,
        "count": len(quads),
        "quads": [dict(q.to_json(), sum=str(four_term_sum(q, config.k))) for q in quads],
    }
    if config.report:
        write_json(data, config.report)
    _write_table(config, df, f"fourterm_n{config.n}_alpha{config.k}.csv")
    _emit(config, f"nonzero four-term sums: {len(quads)}\n{render_frame(df)}", data)
    return OK


def run_gevrey(config: RunConfig) -> int:
    result = gevrey_check(parse_rational(config.c_bound), config.k, config.order, limit=config.constructive_limit)
    _write_table(config, result.table, f"gevrey_k{config.k}.csv")
    text = f"{render_report(result.report)}\nfitted growth K = {result.growth:.6f}\n{render_frame(result.table)}"
    _emit(config, text, result.to_json())
    return OK if result.report.passed else FAILED


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "enumerate": run_enumerate,
    "counts": run_counts,
    "stats": run_stats,
    "table": run_table,
    "gamma": run_gamma,
    "pseries": run_pseries,
    "verify": run_verify,
    "fourterm": run_fourterm,
    "gevrey": run_gevrey,
}


def dispatch(argv: List[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK

    try:
        settings = load_settings()
        setup_logging("DEBUG" if args.verbose else settings.get("logging", {}).get("level", "INFO"))
        config = build_run_config(args, settings)
    except ChordError as e:
        setup_logging("INFO")
        logger.error("%s", e)
        return USAGE

    try:
        return COMMANDS[config.command](config)
    except ChordError as e:
        logger.error("%s", e)
        return USAGE
    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return FAILED


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
