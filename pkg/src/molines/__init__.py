"""Method-of-lines solvers for the Laplace equation on a rectangle and for a
wave equation with a nonlocal integral condition, with analytic references
and convergence tooling."""

from .exceptions import DomainError, InputError, InstabilityError, MolError, NumericFailure
from .spectral_basis import (
    BoundaryKind,
    SpectralBasis,
    TridiagonalOperator,
    build_operator,
    closed_form_basis,
    forward_transform,
    inverse_transform,
    numeric_verify,
)
from .ortho_poly import build_sequence, characteristic_roots, eigenvector_from_polys
from .laplace import LaplaceProblem, LineField, solve
from .analytic import SeriesSolution, evaluate_series, exact_special, fourier_coefficients, series_solution
from .error_analysis import convergence_order, error_field, fit_order
from .wave import WaveProblem, WaveState, run_and_compare, step_rk4, table_problem

__version__ = "0.1.0"
