import numpy as np
import pytest

from molines.exceptions import DomainError, InputError, NumericFailure
from molines.ortho_poly import (
    PolynomialSequence,
    build_sequence,
    characteristic_roots,
    eigenvector_from_polys,
)
from molines.spectral_basis import ALL_COMBOS, build_operator, closed_form_basis

S3 = np.sqrt(3.0)


def _seq(n, left, right):
    return build_sequence(n, left.corner, right.corner)


def test_printed_polynomials_n5():
    seq = build_sequence(5, 2, 2)
    expected = {
        0: [1],
        1: [2, -1],
        2: [3, -4, 1],
        3: [4, -10, 6, -1],
        4: [5, -20, 21, -8, 1],
        5: [6, -35, 56, -36, 10, -1],
    }
    for k, coeffs in expected.items():
        np.testing.assert_array_equal(seq.coefficients(k), coeffs)
        assert seq.coefficients(k)[-1] == (-1) ** k


def test_single_line_sequence():
    seq = build_sequence(1, 2, 2)
    np.testing.assert_array_equal(seq.coefficients(1), [2, -1])
    np.testing.assert_allclose(characteristic_roots(seq), [2.0], atol=1e-12)


def test_initialisation_values():
    seq = build_sequence(5, 2, 2)
    assert seq.values(0.0)[1] == 2.0
    assert seq.values(7.0)[0] == 1.0


def test_invalid_corners_and_size():
    with pytest.raises(InputError):
        build_sequence(4, 3, 2)
    with pytest.raises(InputError):
        build_sequence(0, 2, 2)


def test_large_n_has_no_coefficients():
    seq = build_sequence(30, 2, 2)
    assert seq.polys is None
    with pytest.raises(InputError):
        seq.coefficients(3)


def test_roots_n5():
    roots = characteristic_roots(build_sequence(5, 2, 2))
    np.testing.assert_allclose(roots, [2 - S3, 1, 2, 3, 2 + S3], atol=1e-12, rtol=0)


def test_roots_n3():
    roots = characteristic_roots(build_sequence(3, 2, 2))
    expected = [4 * np.sin(np.pi / 8) ** 2, 2.0, 4 * np.sin(3 * np.pi / 8) ** 2]
    np.testing.assert_allclose(roots, expected, atol=1e-12, rtol=0)


@pytest.mark.parametrize("n", [2, 7, 20, 64])
def test_roots_match_closed_form_dirichlet(n):
    roots = characteristic_roots(build_sequence(n, 2, 2))
    np.testing.assert_allclose(roots, closed_form_basis(n, "D", "D").lambdas, atol=1e-10)


def test_malformed_sequence_fails():
    # A corner outside the admissible set pushes a root below zero.
    bad = PolynomialSequence(4, -1.0, 2.0, None)
    with pytest.raises(NumericFailure):
        characteristic_roots(bad)


def test_eigenvector_for_lambda_two():
    v = eigenvector_from_polys(build_sequence(5, 2, 2), 2.0)
    np.testing.assert_allclose(v, np.array([1, 0, -1, 0, 1]) / S3, atol=1e-12)
    np.testing.assert_allclose(v, closed_form_basis(5, "D", "D").t_matrix[:, 2], atol=1e-12)


def test_eigenvector_single_line():
    np.testing.assert_allclose(eigenvector_from_polys(build_sequence(1, 2, 2), 2.0), [1.0])


def test_eigenvector_rejects_non_root():
    with pytest.raises(DomainError):
        eigenvector_from_polys(build_sequence(5, 2, 2), 1.5)


def test_eigenvectors_n15_match_closed_form():
    seq = build_sequence(15, 2, 2)
    basis = closed_form_basis(15, "D", "D")
    for k, lam in enumerate(basis.lambdas):
        np.testing.assert_allclose(eigenvector_from_polys(seq, lam), basis.t_matrix[:, k], atol=1e-9)


@pytest.mark.parametrize("left,right", ALL_COMBOS)
def test_sturm_count_property(left, right):
    n = 11
    seq = _seq(n, left, right)
    lambdas = closed_form_basis(n, left, right).lambdas
    probes = np.concatenate([lambdas - 1e-7, lambdas + 1e-7, np.linspace(-0.5, 4.5, 37)])
    for x in probes:
        assert seq.count_below(x) == int(np.sum(lambdas < x))


@pytest.mark.parametrize("left,right", ALL_COMBOS)
def test_characteristic_polynomial_vanishes_at_eigenvalues(left, right):
    n = 20
    seq = _seq(n, left, right)
    scale = max(np.abs(seq.coefficients(n)).max(), 1.0)
    for lam in closed_form_basis(n, left, right).lambdas:
        assert abs(np.polynomial.polynomial.polyval(lam, seq.coefficients(n))) <= 1e-8 * scale
        assert abs(seq.char_poly(lam)[0]) <= 1e-8 * scale


@pytest.mark.parametrize("left,right", ALL_COMBOS)
def test_char_poly_is_determinant(left, right):
    n = 6
    seq = _seq(n, left, right)
    p = build_operator(n, left, right).dense()
    for x in (-0.3, 0.7, 2.5, 3.9):
        assert seq.char_poly(x)[0] == pytest.approx(np.linalg.det(p - x * np.eye(n)), abs=1e-10)


def test_char_poly_derivative_finite_difference():
    seq = build_sequence(9, 1, 2)
    x, eps = 1.37, 1e-6
    fd = (seq.char_poly(x + eps)[0] - seq.char_poly(x - eps)[0]) / (2 * eps)
    assert seq.char_poly(x)[1] == pytest.approx(fd, rel=1e-7)


@pytest.mark.parametrize("left,right", ALL_COMBOS)
def test_discrete_orthogonality(left, right):
    n = 20
    seq = _seq(n, left, right)
    lambdas = closed_form_basis(n, left, right).lambdas
    vals = np.array([seq.values(lam)[:-1] for lam in lambdas])  # rows: k, cols: i
    weights = 1.0 / np.sum(vals**2, axis=1)
    gram = (vals * weights[:, None]).T @ vals
    np.testing.assert_allclose(gram, np.eye(n), atol=1e-9)
