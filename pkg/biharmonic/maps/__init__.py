"""Vector-valued polynomial maps, their differential operators and sphere checks."""

from .meta import DiagonalMeta, HomogeneousMeta, MapKind, ProductMeta, SphereMapMeta
from .operators import (
    LAPLACIAN_CONVENTION,
    apply_linear_map,
    compose_linear,
    differential_inner,
    energy_density,
    euclidean_laplacian,
    grad_norm_squared,
    gradient,
    hessian_norm_squared,
    is_orthogonal,
    push_gradient,
    radial_derivative,
    sphere_laplacian,
    sphere_laplacian_map,
)
from .polymap import PolyMap, constant_map
from .restriction import form_signature, sphere_restriction_check

__all__ = [
    "DiagonalMeta",
    "HomogeneousMeta",
    "LAPLACIAN_CONVENTION",
    "MapKind",
    "PolyMap",
    "ProductMeta",
    "SphereMapMeta",
    "apply_linear_map",
    "compose_linear",
    "constant_map",
    "differential_inner",
    "energy_density",
    "euclidean_laplacian",
    "form_signature",
    "grad_norm_squared",
    "gradient",
    "hessian_norm_squared",
    "is_orthogonal",
    "push_gradient",
    "radial_derivative",
    "sphere_laplacian",
    "sphere_laplacian_map",
    "sphere_restriction_check",
]
