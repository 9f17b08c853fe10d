"""Gallery maps and the constructions that combine them."""

from .forms import (
    circle_harmonics,
    hopf_isometry_matrix,
    hopf_isometry_transform,
    hopf_map,
    identity_map,
    radial_multiple,
    stack,
    x_times_g,
)
from .gallery import (
    ALIASES,
    GALLERY,
    GalleryEntry,
    cck_degree3,
    final_example_map,
    gallery_names,
    mixed_example,
    named_form,
    quadratic_example_f1,
    quartic_example_f2,
    veronese,
)
from .schemes import diagonal_sum, product_map

__all__ = [
    "ALIASES",
    "GALLERY",
    "GalleryEntry",
    "cck_degree3",
    "circle_harmonics",
    "diagonal_sum",
    "final_example_map",
    "gallery_names",
    "hopf_isometry_matrix",
    "hopf_isometry_transform",
    "hopf_map",
    "identity_map",
    "mixed_example",
    "named_form",
    "product_map",
    "quadratic_example_f1",
    "quartic_example_f2",
    "radial_multiple",
    "stack",
    "veronese",
    "x_times_g",
]
