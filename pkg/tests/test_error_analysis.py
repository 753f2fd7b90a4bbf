import numpy as np
import pytest

from molines import laplace
from molines.analytic import exact_special, series_solution
from molines.error_analysis import convergence_order, error_field, fit_order
from molines.exceptions import InputError


@pytest.fixture(scope="module")
def plate_series():
    return series_solution(lambda x: 100.0, k_max=400)


def test_constant_top_problem_eight_curves(plate_series):
    report = error_field(laplace.solve(laplace.constant_top_problem()), plate_series)
    assert report.distinct_curves == 8
    assert report.curves.shape == (101, 15)
    assert report.global_max == report.per_line_max.max()
    # errors are smallest on the centre line
    assert report.per_line_max.argmin() == 7


def test_reference_against_itself_is_zero():
    field = laplace.solve(laplace.constant_top_problem(9))
    report = error_field(field, lambda x, y: field(y))
    assert report.global_max == 0.0
    np.testing.assert_array_equal(report.curves, 0.0)


def test_special_problem_error_closed_form():
    n = 15
    h = 1 / (n + 1)
    report = error_field(laplace.solve(laplace.special_problem(n)), exact_special, [0.5])
    rate = np.pi * np.sinc(h / 2)
    expected = abs(np.sinh(np.pi) * np.sinh(rate / 2) / np.sinh(rate) - np.sinh(np.pi / 2))
    assert report.curves[0, 7] == pytest.approx(expected, abs=1e-12)
    assert report.global_max == pytest.approx(expected, abs=1e-12)


def test_special_problem_error_one_sign():
    # MOL overestimates: pi sinc(h/2) < pi and sinh(s y)/sinh(s) decreases in s.
    field = laplace.solve(laplace.special_problem(15))
    x = field.x_nodes
    for y in np.linspace(0.01, 0.99, 50):
        assert np.all(field(y) >= exact_special(x, y) - 1e-12)


def test_error_vanishes_on_y_boundaries():
    report = error_field(laplace.solve(laplace.special_problem(15)), exact_special)
    assert np.abs(report.curves[0]).max() <= 1e-9
    assert np.abs(report.curves[-1]).max() <= 1e-9


@pytest.mark.parametrize("n", [7, 15, 31])
def test_symmetric_problems_fold_to_half(n):
    report = error_field(laplace.solve(laplace.special_problem(n)), exact_special)
    assert report.distinct_curves == (n + 1) // 2


def test_mismatched_rectangle(plate_series):
    field = laplace.solve(laplace.LaplaceProblem(n=5, b=2.0))
    with pytest.raises(InputError):
        error_field(field, plate_series)
    with pytest.raises(InputError):
        error_field(laplace.solve(laplace.constant_top_problem(5)), plate_series, [0.5, 1.5])


def test_convergence_special_ladder():
    fit = convergence_order(lambda n: laplace.solve(laplace.special_problem(n)), exact_special, [7, 15, 31, 63])
    assert 1.9 <= fit.order <= 2.1
    assert np.all((fit.probe_ratios > 3.6) & (fit.probe_ratios < 4.4))
    assert 1.9 <= fit.last_pair_order <= 2.1


def test_convergence_zero_problem_undefined():
    fit = convergence_order(
        lambda n: laplace.solve(laplace.LaplaceProblem(n=n)),
        lambda x, y: np.zeros_like(np.asarray(x, dtype=float)),
        [3, 7, 15],
    )
    assert fit.order is None and fit.pair_orders is None
    np.testing.assert_array_equal(fit.errors, 0.0)


def test_convergence_needs_three_levels():
    with pytest.raises(InputError):
        convergence_order(lambda n: None, exact_special, [7, 15])


def test_fit_order_exact_power_law():
    h = np.array([0.1, 0.05, 0.025])
    order, pair = fit_order(h, 3.0 * h**2)
    assert order == pytest.approx(2.0, abs=1e-12)
    np.testing.assert_allclose(pair, 2.0, atol=1e-12)


def test_fit_order_requires_decreasing_h():
    with pytest.raises(InputError):
        fit_order([0.1, 0.2, 0.05], [1, 2, 3])
    with pytest.raises(InputError):
        fit_order([0.1, 0.05], [1.0])
