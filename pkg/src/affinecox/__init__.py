"""Exact characteristic and Coxeter polynomials, affine exponents and Coxeter numbers
of untwisted affine Lie algebras, each obtained by at least two independent routes."""
from .coxeter import (
    ExponentData,
    affine_exponents,
    coxeter_element,
    coxeter_polynomial,
    defect_check,
    exponents_from_polynomial,
)
from .errors import AffineCoxError
from .polyalgebra import (
    CyclotomicFactorization,
    Poly,
    chebyshev_T,
    chebyshev_U,
    cyclotomic,
    factor_cyclotomic,
    parse_poly,
    psi,
    symmetrized_lift,
)
from .rootdata import DiagramId, cartan_matrix, marks
from .spectra import SpectralBundle, bundle_from_determinants, charpoly_exact, q_closed_form
from .weights import blm_expansion, blm_exponents, steinberg_polynomial

__version__ = "0.1.0"

__all__ = [
    "AffineCoxError",
    "CyclotomicFactorization",
    "DiagramId",
    "ExponentData",
    "Poly",
    "SpectralBundle",
    "affine_exponents",
    "blm_expansion",
    "blm_exponents",
    "bundle_from_determinants",
    "cartan_matrix",
    "charpoly_exact",
    "chebyshev_T",
    "chebyshev_U",
    "coxeter_element",
    "coxeter_polynomial",
    "cyclotomic",
    "defect_check",
    "exponents_from_polynomial",
    "factor_cyclotomic",
    "marks",
    "parse_poly",
    "psi",
    "q_closed_form",
    "steinberg_polynomial",
    "symmetrized_lift",
]
