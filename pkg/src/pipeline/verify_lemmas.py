"""
Exhaustive checks of the bijection and of the diagram lemmas used in the
second recurrence. Each check walks RCCD(n) for ``n <= n_max`` and reports
every failing case.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from math import comb
from typing import Dict, Tuple

from chords.diagram import ChordDiagram, root_share_decompose
from chords.enumeration import DEFAULT_CONSTRUCTIVE_LIMIT, rccd
from chords.errors import LimitExceededError, TreeImageError
from chords.order import stats
from chords.trees import (
    Node,
    all_labelled_trees,
    check_p1,
    check_p2_recursive,
    from_tree,
    fully_right_leaf,
    in_image,
    leaf_count,
    normalize,
    relabel,
    to_tree,
)
from pipeline.reports import CheckReport
from symbolic.polynomial import f, poly_to_str

logger = logging.getLogger(__name__)

FILTER_LIMIT = 5


def _diagrams(n_max: int, limit: int, start: int = 1):
    if n_max > limit:
        raise LimitExceededError("n", n_max, limit)
    for n in range(start, n_max + 1):
        yield from rccd(n, limit)


def _zeros_first(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(x for x in seq if x == 0) + tuple(x for x in seq if x != 0)


def check_delta_concat(n_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """
    Root-share decomposition ``C = C1 (0,i) C2`` against the gap data:
    ``b(C) = b(C2) + 1``, ``f_C = f_C1 f_{b(C1)-1} f_C2`` and ``delta_bar(C)``
    is ``delta_bar(C2), b(C1) - 1, delta_bar(C1)`` with the zeros moved to the front.
    """
    report = CheckReport("delta concatenation")
    literal_mismatches = 0
    example = None
    for diagram in _diagrams(n_max, limit, start=2):
        inner, interval, host = root_share_decompose(diagram)
        s, s1, s2 = stats(diagram), stats(inner), stats(host)
        pairing = list(diagram.pairing)
        report.record(s.b == s2.b + 1, pairing=pairing, what="b(C) = b(C2) + 1", b=s.b, b_host=s2.b)
        expected_f = s1.monomial.to_poly() * f(s1.b - 1) * s2.monomial.to_poly()
        report.record(
            s.monomial.to_poly() == expected_f,
            pairing=pairing, what="f_C = f_C1 f_(b(C1)-1) f_C2", got=str(s.monomial), expected=poly_to_str(expected_f),
        )
        joined = _zeros_first(s2.delta_bar + (s1.b - 1,) + s1.delta_bar)
        report.record(
            joined == s.delta_bar,
            pairing=pairing, what="delta_bar concatenation", got=list(s.delta_bar), expected=list(joined),
        )
        literal = s2.delta_bar + (s1.b - 2,) + s1.delta_bar
        if literal != s.delta_bar:
            literal_mismatches += 1
            if example is None:
                example = {"pairing": pairing, "delta_bar": list(s.delta_bar), "literal": list(literal)}
    report.note(reading="delta_bar(C2), b(C1) - 2, delta_bar(C1)", mismatches=literal_mismatches, example=example)
    logger.info(report.summary())
    return report


def _subtree_diagrams(diagram: ChordDiagram):
    tree = to_tree(diagram)
    d1 = from_tree(normalize(tree.left))
    d2 = from_tree(normalize(tree.right))
    return d1, d2


def check_old_claims(n_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """
    With ``D1``, ``D2`` the diagrams of the root's left and right subtrees of T(C):
    ``b(D1) >= b(C) - b(D2)`` and ``f_C = f_D1 f_{b(D1)+b(D2)-b(C)} f_D2``.
    """
    report = CheckReport("subtree claims")
    for diagram in _diagrams(n_max, limit, start=2):
        d1, d2 = _subtree_diagrams(diagram)
        s, s1, s2 = stats(diagram), stats(d1), stats(d2)
        pairing = list(diagram.pairing)
        report.record(s1.b >= s.b - s2.b, pairing=pairing, what="b(D1) >= b(C) - b(D2)", b=s.b, b1=s1.b, b2=s2.b)
        expected = s1.monomial.to_poly() * f(s1.b + s2.b - s.b) * s2.monomial.to_poly()
        report.record(
            s.monomial.to_poly() == expected,
            pairing=pairing, what="f_C = f_D1 f_(b(D1)+b(D2)-b(C)) f_D2", got=str(s.monomial), expected=poly_to_str(expected),
        )
    logger.info(report.summary())
    return report


def shuffle_counts(d1: ChordDiagram, d2: ChordDiagram) -> Counter:
    """
    Place T(D1) left and T(D2) right under a new root, try every split of the
    labels between the two sides, and count the labellings in the T-image by
    their fully right leaf.
    """
    g1, g2 = to_tree(d1), to_tree(d2)
    n1, n = d1.n, d1.n + d2.n
    counts: Counter = Counter()
    for left_labels in itertools.combinations(range(1, n + 1), n1):
        right_labels = sorted(set(range(1, n + 1)) - set(left_labels))
        tree = Node(
            relabel(g1, lambda l: left_labels[l - 1]),
            relabel(g2, lambda l: right_labels[l - 1]),
        )
        if in_image(tree):
            counts[fully_right_leaf(tree)] += 1
    return counts


def check_shuffle_counts(n_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """
    For ``b(C) = j + 1`` and ``l = b(C) - b(D2)``, exactly ``binom(j, l)`` label
    shuffles land in the image when ``1 <= l <= b(D1)``, and none otherwise.
    """
    report = CheckReport("shuffle counts")
    if n_max > limit:
        raise LimitExceededError("n", n_max, limit)
    for total in range(2, n_max + 1):
        for n1 in range(1, total):
            for d1 in rccd(n1, limit):
                for d2 in rccd(total - n1, limit):
                    b1, b2 = stats(d1).b, stats(d2).b
                    counts = shuffle_counts(d1, d2)
                    for top in range(1, total + 1):
                        j, l = top - 1, top - b2
                        expected = comb(j, l) if 1 <= l <= b1 else 0
                        report.record(
                            counts.get(top, 0) == expected,
                            d1=list(d1.pairing), d2=list(d2.pairing), fully_right=top, got=counts.get(top, 0), expected=expected,
                        )
    logger.info(report.summary())
    return report


def check_bijection(n_max: int, limit: int = DEFAULT_CONSTRUCTIVE_LIMIT) -> CheckReport:
    """
    Round trip ``from_tree(to_tree(C)) = C``, injectivity, P1 and recursive P2
    on every image, ``b(C)`` = fully right leaf, and for small ``n`` the
    P1/P2 filter over all labelled trees equals the image.
    """
    report = CheckReport("bijection")
    if n_max > limit:
        raise LimitExceededError("n", n_max, limit)
    for n in range(1, n_max + 1):
        images: Dict[object, ChordDiagram] = {}
        largest_failures = 0
        for diagram in rccd(n, limit):
            tree = to_tree(diagram)
            pairing = list(diagram.pairing)
            report.record(leaf_count(tree) == n, pairing=pairing, what="leaf count")
            report.record(check_p1(tree) and check_p2_recursive(tree), pairing=pairing, what="P1 and P2", tree=str(tree))
            try:
                back = from_tree(tree)
            except TreeImageError as exc:
                report.record(False, pairing=pairing, what="round trip", error=str(exc))
            else:
                report.record(back == diagram, pairing=pairing, what="round trip", got=list(back.pairing))
            report.record(
                fully_right_leaf(tree) == stats(diagram).b,
                pairing=pairing, what="b = fully right leaf", b=stats(diagram).b, leaf=fully_right_leaf(tree),
            )
            report.record(tree not in images, pairing=pairing, what="injective", tree=str(tree))
            images[tree] = diagram
            try:
                if from_tree(tree, strategy="largest") != diagram:
                    largest_failures += 1
            except TreeImageError:
                largest_failures += 1
        report.note(n=n, strategy="largest", failures=largest_failures, diagrams=len(images))
        if n <= FILTER_LIMIT:
            filtered = {t for t in all_labelled_trees(n) if in_image(t)}
            report.record(
                filtered == set(images),
                n=n, what="P1/P2 filter equals image", filtered=len(filtered), image=len(images),
            )
    logger.info(report.summary())
    return report
