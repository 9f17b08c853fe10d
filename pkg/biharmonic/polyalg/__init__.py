"""Exact coefficient arithmetic and sparse polynomial algebra."""

from .polynomials import (
    Monomial,
    Polynomial,
    divide_by_radius_squared,
    evaluate,
    homogeneous_degree,
    monomial_degree,
    normal_form_mod_sphere,
    partial_derivative,
)
from .radicals import (
    RadicalScalar,
    format_rational,
    radical_product,
    sqrt_of_rational,
    squarefree_decomposition,
)

__all__ = [
    "Monomial",
    "Polynomial",
    "RadicalScalar",
    "divide_by_radius_squared",
    "evaluate",
    "format_rational",
    "homogeneous_degree",
    "monomial_degree",
    "normal_form_mod_sphere",
    "partial_derivative",
    "radical_product",
    "sqrt_of_rational",
    "squarefree_decomposition",
]
