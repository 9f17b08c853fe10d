"""Tension and bitension engines, verdicts and closed-form identity checks."""

from .classify import AnalysisReport, analyze, classify, differing_components
from .diagonal import bitension_diagonal, bitension_diagonal_terms, tension_diagonal
from .general import (
    BitensionWorksheet,
    GeneralRoute,
    bitension_general,
    bitension_product_general,
    general_route_for,
    run_general_route,
    tension_general,
    tension_product_general,
)
from .homogeneous import (
    bitension_homogeneous,
    bitension_homogeneous_terms,
    tension_homogeneous,
)
from .identities import (
    CriterionReport,
    HarmonicIdentityReport,
    PrintedVariant,
    SliceReport,
    TripleEquivalence,
    combined_second_order,
    diagonal_harmonicity_criterion,
    harmonic_identities_check,
    minimality_check,
    quadratic_identity_check,
    quadratic_triple_equivalence,
    small_hypersphere_check,
)
from .product import bitension_product, eigenvalue_gap, tension_product

__all__ = [
    "AnalysisReport",
    "BitensionWorksheet",
    "CriterionReport",
    "GeneralRoute",
    "HarmonicIdentityReport",
    "PrintedVariant",
    "SliceReport",
    "TripleEquivalence",
    "analyze",
    "bitension_diagonal",
    "bitension_diagonal_terms",
    "bitension_general",
    "bitension_homogeneous",
    "bitension_homogeneous_terms",
    "bitension_product",
    "bitension_product_general",
    "classify",
    "combined_second_order",
    "diagonal_harmonicity_criterion",
    "differing_components",
    "eigenvalue_gap",
    "general_route_for",
    "harmonic_identities_check",
    "minimality_check",
    "quadratic_identity_check",
    "quadratic_triple_equivalence",
    "run_general_route",
    "small_hypersphere_check",
    "tension_diagonal",
    "tension_general",
    "tension_homogeneous",
    "tension_product",
    "tension_product_general",
]
