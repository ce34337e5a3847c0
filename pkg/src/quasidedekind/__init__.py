"""Exact Euler polynomials, quasi-periodic Euler functions and Apostol-Dedekind sums."""
from .calculus import (
    FourierApproximation,
    PiecewisePolynomial,
    boole_sum_check,
    fourier_approximation,
    fourier_partial,
    integral_lemma_value,
    integrate_quasi_product,
    quasi_euler_affine,
    quasi_euler_piecewise,
    sign_integral,
    x_weighted_integral,
)
from .euler import (
    bernoulli_polynomial,
    euler_at_zero,
    euler_number,
    euler_polynomial,
    periodic_bernoulli_eval,
    quasi_euler_eval,
)
from .exact import (
    IntegerPair,
    Polynomial,
    binomial,
    floor_frac,
    poly_affine_compose,
    poly_antiderivative,
    poly_derivative,
    poly_eval,
)
from .sums import (
    PreconditionError,
    ReciprocityReport,
    SumResult,
    apostol_dedekind_T,
    distribution_check,
    generalized_dedekind_S,
    reciprocity_sides,
    rho,
    t_sum,
    weighted_T,
)

__version__ = "0.1.0"
