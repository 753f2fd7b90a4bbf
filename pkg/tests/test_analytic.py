import numpy as np
import pytest

from molines import analytic
from molines.analytic import evaluate_series, exact_special, fourier_coefficients, series_solution
from molines.exceptions import DomainError, InputError, NumericFailure

SPECIAL = lambda x: np.sinh(np.pi) * np.sin(np.pi * x)


@pytest.fixture(scope="module")
def plate():
    return series_solution(lambda x: 100.0, k_max=400)


def test_constant_profile_coefficients():
    alphas = fourier_coefficients(lambda x: 100.0, 1.0, 50)
    k = np.arange(1, 51)
    expected = np.where(k % 2 == 1, 400.0 / (k * np.pi), 0.0)
    np.testing.assert_allclose(alphas, expected, atol=1e-8)


def test_zero_profile():
    np.testing.assert_array_equal(fourier_coefficients(lambda x: 0 * x, 1.0, 10), 0.0)


def test_sine_profile_orthogonality():
    alphas = fourier_coefficients(SPECIAL, 1.0, 20)
    assert alphas[0] == pytest.approx(np.sinh(np.pi), abs=1e-9)
    assert np.abs(alphas[1:]).max() <= 1e-9


def test_coefficients_on_wider_interval():
    # f(x) = x on (0, 2): alpha_k = (2/2) int_0^2 x sin(k pi x / 2) dx = 4 (-1)^(k+1) / (k pi)
    alphas = fourier_coefficients(lambda x: x, 2.0, 12)
    k = np.arange(1, 13)
    np.testing.assert_allclose(alphas, 4 * (-1.0) ** (k + 1) / (k * np.pi), atol=1e-8)


def test_coefficients_against_scipy_quad():
    from scipy.integrate import quad

    f = lambda x: np.exp(-x) * (1 + x)
    alphas = fourier_coefficients(f, 1.0, 6)
    for k in range(1, 7):
        ref = 2 * quad(lambda x: f(x) * np.sin(k * np.pi * x), 0, 1, epsabs=1e-13)[0]
        assert alphas[k - 1] == pytest.approx(ref, abs=1e-9)


def test_quadrature_non_convergence(monkeypatch):
    monkeypatch.setattr(analytic, "MAX_PANELS", 256)
    with pytest.raises(NumericFailure):
        fourier_coefficients(lambda x: np.where(x < 1 / 3, 1.0, 0.0), 1.0, 5, 1e-14)


def test_invalid_arguments():
    with pytest.raises(InputError):
        fourier_coefficients(lambda x: x, 1.0, 0)
    with pytest.raises(InputError):
        fourier_coefficients(lambda x: x * np.nan, 1.0, 3)


def test_constant_top_checkpoint_values(plate):
    assert round(evaluate_series(plate, 0.25, 0.75).value, 4) == 43.2028
    assert evaluate_series(plate, 0.5, 0.5).value == pytest.approx(24.9999, abs=5e-4)
    assert evaluate_series(plate, 0.75, 0.25).value == pytest.approx(6.7971, abs=5e-4)


def test_closed_form_sum_matches(plate):
    # (400/pi) sum over odd m of sinh(m pi y)/(m sinh(m pi)) sin(m pi x) with
    # direct sinh calls; m <= 199 stays clear of overflow and the rest is < 1e-100.
    m = np.arange(1, 200, 2)
    x, y = 0.3, 0.6
    ref = 400 / np.pi * np.sum(np.sin(m * np.pi * x) * np.sinh(m * np.pi * y) / np.sinh(m * np.pi) / m)
    assert evaluate_series(plate, x, y).value == pytest.approx(ref, abs=1e-9)


def test_boundary_zeros(plate):
    for y in (0.0, 0.3, 0.9, 1.0):
        assert evaluate_series(plate, 0.0, y).value == 0.0
        assert evaluate_series(plate, 1.0, y).value == 0.0
    for x in (0.1, 0.5, 0.77):
        assert evaluate_series(plate, x, 0.0).value == 0.0


def test_out_of_domain(plate):
    with pytest.raises(DomainError):
        evaluate_series(plate, 1.2, 0.5)
    with pytest.raises(DomainError):
        evaluate_series(plate, 0.5, -0.1)


def test_truncation_and_gibbs_flags(plate):
    interior = evaluate_series(plate, 0.5, 0.5)
    assert not interior.truncated and not interior.gibbs_warning
    assert interior.terms < plate.k_max
    top = evaluate_series(plate, 0.5, 1.0)
    assert top.truncated and top.gibbs_warning and top.terms == plate.k_max


def test_term_decay_bound(plate):
    k = np.arange(1, plate.k_max + 1)
    for y in (0.1, 0.5, 0.9):
        rate = k * np.pi
        terms = np.abs(plate.alphas * analytic.sinh_ratio(rate, y, 1.0))
        assert np.all(terms <= np.abs(plate.alphas) * np.exp(-rate * (1 - y)) * (1 + 1e-12))


def test_kmax_doubling_consistency(plate):
    small = series_solution(lambda x: 100.0, k_max=200)
    for x in (0.1, 0.25, 0.5, 0.8):
        for y in (0.2, 0.5, 0.9):
            assert abs(small(x, y) - plate(x, y)) <= 1e-10


def test_special_series_collapses():
    sol = series_solution(SPECIAL, k_max=50)
    rng = np.random.default_rng(5)
    for x, y in rng.uniform(0.01, 0.99, size=(20, 2)):
        assert abs(exact_special(x, y) - evaluate_series(sol, x, y).value) <= 1e-10


def test_exact_special_values():
    assert exact_special(0.5, 1.0) == pytest.approx(11.548739357257748, abs=1e-12)
    assert exact_special(0.0, 0.4) == 0.0


def test_series_callable_accepts_arrays(plate):
    x = np.array([0.25, 0.5])
    np.testing.assert_allclose(plate(x, 0.5), [plate(0.25, 0.5), plate(0.5, 0.5)])
