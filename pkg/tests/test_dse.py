from fractions import Fraction

import pytest

from chords.errors import ChordError, LimitExceededError
from pipeline.verify_dse import (
    F_enumerated,
    F_oracle,
    RhoPolynomial,
    check_f_oracle,
    check_gamma_recurrence,
    check_main_theorem,
    check_p_series,
    check_second_rec,
    check_solver_agreement,
    diagram_g,
    operator_series,
    substituted,
)
from symbolic.dse_solver import DseSolver, F_recurrence, gamma_by_recurrence, solve_dse
from symbolic.expansion import g_series, gamma_series
from symbolic.polynomial import SYMBOL_COUNT, FRing, f
from symbolic.series import XSeries


@pytest.fixture(scope="module")
def g5():
    return diagram_g(5)


def test_solver_matches_diagram_sums():
    solver = DseSolver(6).solve()
    for k in range(1, 7):
        assert solver.g_series(k) == g_series(k, 6)
    assert solver.g_series(7).is_zero()


def test_solve_dse_gammas():
    green = solve_dse(4)
    assert green.gamma(1) == gamma_series(1, 4)
    assert green.gamma(3) == gamma_series(3, 4)


def test_solver_rejects_bad_order():
    with pytest.raises(ChordError):
        DseSolver(0)


def test_F_small_values(g5):
    assert F_oracle(0, 0, g5) == FRing.one
    for i in range(1, 5):
        assert F_oracle(i, 0, g5) == FRing.zero
    assert F_oracle(1, 1, g5) == f(0)
    assert F_recurrence(1, 1, 3) == f(0)
    assert F_enumerated(1, 1) == f(0)
    assert F_oracle(2, 3, g5) == FRing.zero


def test_F_oracle_bounds(g5):
    with pytest.raises(LimitExceededError):
        F_oracle(6, 1, g5)
    with pytest.raises(ChordError):
        F_oracle(-1, 0, g5)


def test_operator_iteration_terminates():
    g = diagram_g(3)
    start = RhoPolynomial.rho_power(2, 3)
    # G^1 rho^2 = 2 g_1 rho + g_2, G^2 rho^2 = 2 g_1^2
    expected = g[2] + (g[1] * g[1]).scale(2)
    assert operator_series(start, g) == expected


def test_g1_without_higher_symbols():
    values = {0: Fraction(1, 3), **{j: 0 for j in range(1, 10)}}
    coeffs = g_series(1, 5).substitute(values)
    assert coeffs == [0, Fraction(1, 3), 0, 0, 0, 0]


def test_gamma_by_recurrence_matches():
    gamma_1 = gamma_series(1, 5)
    for k in range(2, 5):
        assert gamma_by_recurrence(k, gamma_1) == gamma_series(k, 5)
    assert gamma_by_recurrence(1, gamma_1) == gamma_1


@pytest.mark.parametrize("order", [2, 6])
def test_main_theorem(order):
    report = check_main_theorem(order)
    assert report.passed, report.violations
    assert report.checked == order + 1


def test_gamma_recurrence():
    report = check_gamma_recurrence(6)
    assert report.passed, report.violations


def test_solver_agreement_report():
    assert check_solver_agreement(5).passed


def test_second_rec():
    report = check_second_rec(5, 5)
    assert report.passed, report.violations
    assert report.checked == 25


def test_f_oracle_report():
    report = check_f_oracle(5, 5)
    assert report.passed, report.violations
    assert report.checked == 36


def test_f_oracle_limit():
    with pytest.raises(LimitExceededError):
        check_f_oracle(5, 2, limit=5)


def test_p_series_report():
    report = check_p_series(6)
    assert report.passed
    assert report.notes[0]["x1"] == "0"


def test_substituted():
    assert substituted(XSeries.monomial(2, 2, f(0) * f(1)), {0: 2, 1: 3}) == {2: "6"}
    with pytest.raises(ChordError):
        substituted(XSeries.monomial(2, 1, f(4)), {0: 1})


def test_solver_order_within_symbol_ring():
    with pytest.raises(LimitExceededError):
        DseSolver(SYMBOL_COUNT + 1)
    assert DseSolver(SYMBOL_COUNT).order == SYMBOL_COUNT
