import logging
from fractions import Fraction
from typing import List

from biharmonic.errors import DimensionMismatch, InvalidArgument, NotAForm
from biharmonic.maps import PolyMap, apply_linear_map, form_signature
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)

# Component order applied after the 4x4 isometry so that x_times_g(circle_harmonics(k))
# becomes (1/sqrt(2)) (|z|^2 z^(k-1), z^(k+1)).
HOPF_ISOMETRY_ORDER = (0, 2, 3, 1)


def circle_harmonics(k: int) -> PolyMap:
    """
    G_k = (Re z^k, Im z^k) on R^2.

    P_(k+1) = x P_k - y Q_k and Q_(k+1) = x Q_k + y P_k, starting from (x, y).
    """
    if k < 1:
        raise InvalidArgument(f"Circle harmonics start at degree 1, got {k}")
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    real, imaginary = x, y
    for _ in range(k - 1):
        real, imaginary = x * real - y * imaginary, x * imaginary + y * real
    return PolyMap([real, imaginary])


def identity_map(m: int) -> PolyMap:
    """The inclusion x of S^m in R^(m+1)."""
    if m < 1:
        raise InvalidArgument(f"Sphere dimension must be at least 1, got {m}")
    return PolyMap([Polynomial.variable(i, m + 1) for i in range(m + 1)])


def x_times_g(G: PolyMap) -> PolyMap:
    """
    F(x) = (x^1 G(x), ..., x^(m+1) G(x)), grouped by the coordinate factor.

    Raises:
        NotAForm: when |G|^2 is not r^2 |x|^(2k)
    """
    if form_signature(G.components) is None:
        raise NotAForm("x * G needs G to be a form", [f"|G|^2 = {G.norm_squared()}"])
    components: List[Polynomial] = []
    for i in range(G.nvars):
        coordinate = Polynomial.variable(i, G.nvars)
        components.extend(coordinate * g for g in G)
    return PolyMap(components, G.nvars)


def radial_multiple(F: PolyMap, p: int) -> PolyMap:
    """|x|^(2p) F; the restriction to the sphere is unchanged."""
    if p < 0:
        raise InvalidArgument(f"Radial power must be non-negative, got {p}")
    if p == 0:
        return F
    return F.scale(Polynomial.radius_squared(F.nvars) ** p)


def stack(first: PolyMap, second: PolyMap) -> PolyMap:
    return first.concat(second)


def hopf_map() -> PolyMap:
    """(x1^2 + x2^2 - x3^2 - x4^2, 2(x1 x3 - x2 x4), 2(x1 x4 + x2 x3)) on R^4."""
    x1, x2, x3, x4 = (Polynomial.variable(i, 4) for i in range(4))
    return PolyMap(
        [
            x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4,
            (x1 * x3 - x2 * x4) * 2,
            (x1 * x4 + x2 * x3) * 2,
        ]
    )


def hopf_isometry_matrix() -> List[List[RadicalScalar]]:
    scale = RadicalScalar.sqrt(2) * Fraction(1, 2)
    rows = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [1, 0, 0, -1]]
    return [[scale * entry for entry in row] for row in rows]


def hopf_isometry_transform(F: PolyMap) -> PolyMap:
    """Apply the 4x4 isometry with 1/sqrt(2) entries, then reorder the components."""
    if len(F) != 4:
        raise DimensionMismatch(f"The isometry acts on 4 components, map has {len(F)}")
    return apply_linear_map(F, hopf_isometry_matrix()).permute(HOPF_ISOMETRY_ORDER)
