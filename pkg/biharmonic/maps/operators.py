"""
Euclidean differential operators on polynomial maps.

Sign convention: the Laplacian is the rough Laplacian, the NEGATIVE of the
sum of pure second partials (laplacian(x^2) = -2).
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from biharmonic.errors import DimensionMismatch
from biharmonic.maps.meta import SphereMapMeta
from biharmonic.maps.polymap import PolyMap
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)

LAPLACIAN_CONVENTION = "laplacian = -(sum of pure second partials)"

MapOrPolynomial = Union[PolyMap, Polynomial]


def _laplacian_component(p: Polynomial) -> Polynomial:
    total = Polynomial.zero(p.nvars)
    for i in range(p.nvars):
        total = total + p.partial(i).partial(i)
    return -total


def euclidean_laplacian(F: MapOrPolynomial) -> MapOrPolynomial:
    """Componentwise -sum_i d^2/dx_i^2."""
    if isinstance(F, Polynomial):
        return _laplacian_component(F)
    return F.map(_laplacian_component)


def _block_indices(
    nvars: int, blocks: Optional[Sequence[int]], block: Optional[int]
) -> Optional[range]:
    if block is None:
        return None
    if blocks is None:
        raise DimensionMismatch("A block index needs the block sizes")
    start = sum(blocks[:block])
    return range(start, start + blocks[block])


def radial_derivative(
    F: MapOrPolynomial,
    blocks: Optional[Sequence[int]] = None,
    block: Optional[int] = None,
) -> MapOrPolynomial:
    """
    Componentwise sum_i x_i dP/dx_i, optionally restricted to one variable block.

    On a homogeneous component of degree k this is k times the component.
    """
    variables = _block_indices(F.nvars, blocks, block)
    if isinstance(F, Polynomial):
        return F.euler_operator(variables)
    return F.map(lambda c: c.euler_operator(variables))


def differential_inner(F: PolyMap, G: PolyMap) -> Polynomial:
    """<d F, d G> = sum_{i, alpha} dF_alpha/dx_i * dG_alpha/dx_i."""
    if len(F) != len(G) or F.nvars != G.nvars:
        raise DimensionMismatch(
            f"Maps of shape {len(F)}x{F.nvars} and {len(G)}x{G.nvars}"
        )
    total = Polynomial.zero(F.nvars)
    for f, g in zip(F, G):
        for i in range(F.nvars):
            total = total + f.partial(i) * g.partial(i)
    return total


def grad_norm_squared(F: PolyMap) -> Polynomial:
    """|dF|^2 = sum_{i, alpha} (dF_alpha/dx_i)^2."""
    total = Polynomial.zero(F.nvars)
    for component in F:
        for i in range(F.nvars):
            derivative = component.partial(i)
            total = total + derivative * derivative
    return total


def hessian_norm_squared(F: PolyMap) -> Polynomial:
    """Full Frobenius norm of every second partial; (i, j) and (j, i) both counted."""
    total = Polynomial.zero(F.nvars)
    for component in F:
        for i in range(F.nvars):
            first = component.partial(i)
            for j in range(F.nvars):
                second = first.partial(j)
                total = total + second * second
    return total


def gradient(h: Polynomial) -> PolyMap:
    return PolyMap([h.partial(i) for i in range(h.nvars)], h.nvars)


def push_gradient(F: PolyMap, h: Polynomial) -> PolyMap:
    """dF applied to grad h: components sum_i dF_alpha/dx_i * dh/dx_i."""
    if h.nvars != F.nvars:
        raise DimensionMismatch(
            f"Map has {F.nvars} variables, function has {h.nvars}"
        )
    grad = [h.partial(i) for i in range(h.nvars)]
    components = []
    for component in F:
        total = Polynomial.zero(F.nvars)
        for i, g in enumerate(grad):
            if g:
                total = total + component.partial(i) * g
        components.append(total)
    return PolyMap(components, F.nvars)


def sphere_laplacian(
    p: Polynomial,
    m: Optional[int] = None,
    blocks: Optional[Sequence[int]] = None,
) -> Polynomial:
    """
    Polynomial representative of the rough Laplacian on S^m (or a product of spheres).

    L[p] = lap(p) + (m - 1) r(p) + r(r(p)); on a product the radial terms are
    taken per block with m_b = block size - 1. Only meaningful after NF.
    """
    if blocks is None:
        dimension = p.nvars - 1 if m is None else m
        if dimension + 1 != p.nvars:
            raise DimensionMismatch(
                f"S^{dimension} needs {dimension + 1} variables, got {p.nvars}"
            )
        radial = p.euler_operator()
        second_radial = radial.euler_operator()
        return _laplacian_component(p) + radial * (dimension - 1) + second_radial
    total = _laplacian_component(p)
    start = 0
    for size in blocks:
        variables = range(start, start + size)
        radial = p.euler_operator(variables)
        total = total + radial * (size - 2) + radial.euler_operator(variables)
        start += size
    if start != p.nvars:
        raise DimensionMismatch(
            f"Blocks {tuple(blocks)} do not cover {p.nvars} variables"
        )
    return total


def sphere_laplacian_map(F: PolyMap, blocks: Sequence[int]) -> PolyMap:
    return F.map(lambda c: sphere_laplacian(c, blocks=blocks))


Matrix = Sequence[Sequence[Union[int, Fraction, RadicalScalar]]]


def apply_linear_map(F: PolyMap, A: Matrix) -> PolyMap:
    """Components of A applied to the component vector of F."""
    rows = [[RadicalScalar.coerce(a) for a in row] for row in A]
    if not rows or any(len(row) != len(F) for row in rows):
        raise DimensionMismatch(
            f"Matrix columns must equal the {len(F)} components of the map"
        )
    components = []
    for row in rows:
        total = Polynomial.zero(F.nvars)
        for a, component in zip(row, F):
            if a:
                total = total + component * a
        components.append(total)
    return PolyMap(components, F.nvars)


def compose_linear(A: Matrix, B: Matrix) -> List[List[RadicalScalar]]:
    """Exact matrix product A*B."""
    left = [[RadicalScalar.coerce(a) for a in row] for row in A]
    right = [[RadicalScalar.coerce(b) for b in row] for row in B]
    if any(len(row) != len(right) for row in left):
        raise DimensionMismatch("Inner matrix dimensions differ")
    columns = len(right[0]) if right else 0
    return [
        [
            sum((row[t] * right[t][j] for t in range(len(right))), RadicalScalar.zero())
            for j in range(columns)
        ]
        for row in left
    ]


def is_orthogonal(A: Matrix) -> bool:
    rows = [[RadicalScalar.coerce(a) for a in row] for row in A]
    size = len(rows)
    if any(len(row) != size for row in rows):
        return False
    transpose = [[rows[j][i] for j in range(size)] for i in range(size)]
    product = compose_linear(transpose, rows)
    return all(
        product[i][j] == (1 if i == j else 0) for i in range(size) for j in range(size)
    )


def energy_density(F: PolyMap, meta: SphereMapMeta) -> Polynomial:
    """
    e = |dPhi|^2 / 2 as an NF polynomial.

    |dPhi|^2 = |dF|^2 - sum_b k_b^2 r_b^2, the radial parts |r_b F|^2 being
    constant on the domain.
    """
    radial_part = RadicalScalar.zero()
    for k, r_sq in zip(meta.degrees, meta.radii_sq):
        radial_part = radial_part + r_sq * (k * k)
    density = grad_norm_squared(F) - radial_part
    return density.normal_form(meta.blocks).scale(Fraction(1, 2))
