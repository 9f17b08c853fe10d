from fractions import Fraction
from unittest import TestCase

from biharmonic.cli.parser import parse_map, parse_polynomial
from biharmonic.constructors import (
    circle_harmonics,
    named_form,
    product_map,
    x_times_g,
)
from biharmonic.errors import DimensionMismatch, NotASphereMap, RadiiDoNotSumToOne
from biharmonic.maps import (
    DiagonalMeta,
    HomogeneousMeta,
    MapKind,
    PolyMap,
    ProductMeta,
    apply_linear_map,
    constant_map,
    differential_inner,
    energy_density,
    euclidean_laplacian,
    form_signature,
    grad_norm_squared,
    hessian_norm_squared,
    is_orthogonal,
    push_gradient,
    radial_derivative,
    sphere_laplacian,
    sphere_restriction_check,
)
from biharmonic.polyalg import Polynomial, RadicalScalar
from biharmonic.tests.factories import cayley_orthogonal


class PolyMapTestCase(TestCase):
    """Test cases for vector-valued polynomial maps."""

    def test_components_share_nvars(self):
        """Components from different rings and empty maps are rejected."""
        with self.assertRaises(DimensionMismatch):
            PolyMap([Polynomial.variable(0, 2), Polynomial.variable(0, 3)])
        with self.assertRaises(DimensionMismatch):
            PolyMap([])

    def test_blockwise_scaling(self):
        """blockwise scales each side of the split; a split past the end fails."""
        F = parse_map("[x, y, x*y]")
        scaled = F.blockwise(2, 3, Fraction(1, 2))
        self.assertEqual(scaled, parse_map("[3*x, 3*y, 1/2*x*y]"))
        with self.assertRaises(DimensionMismatch):
            F.blockwise(3, 1, 1)

    def test_slicing_and_permutation(self):
        """Slices are maps and permutations reorder components; repeats fail."""
        F = parse_map("[x, y, x*y]")
        self.assertEqual(F[1:], parse_map("[y, x*y]", 2))
        self.assertEqual(F.permute((2, 0, 1)), parse_map("[x*y, x, y]"))
        with self.assertRaises(DimensionMismatch):
            F.permute((0, 0, 1))

    def test_evaluate_many_shape(self):
        """Evaluating n points gives an n x components array."""
        F = parse_map("[x, y, x*y]")
        values = F.evaluate_many([[1.0, 2.0], [0.5, -1.0]])
        self.assertEqual(values.shape, (2, 3))
        self.assertAlmostEqual(values[0, 2], 2.0)


class OperatorsTestCase(TestCase):
    """Test cases for the Euclidean operators."""

    def test_laplacian_sign_convention(self):
        """laplacian(x^2) = -2."""
        x = Polynomial.variable(0, 1)
        self.assertEqual(euclidean_laplacian(x * x), -2)

    def test_energy_and_hessian_of_veronese(self):
        """|dF|^2 = 10|x|^2; the Hessian of a quadratic form is constant."""
        F = named_form("veronese").map
        radius = Polynomial.radius_squared(3)
        self.assertEqual(grad_norm_squared(F), radius * 10)
        self.assertTrue(hessian_norm_squared(F).is_constant())

    def test_differential_inner(self):
        """<d[x, y^2], d[y, xy]> = 2xy; mismatched shapes are rejected."""
        F = parse_map("[x, y^2]")
        G = parse_map("[y, x*y]")
        self.assertEqual(differential_inner(F, G), parse_polynomial("2*x*y", 2))
        self.assertEqual(differential_inner(F, F), grad_norm_squared(F))
        with self.assertRaises(DimensionMismatch):
            differential_inner(F, parse_map("[x, y, x*y]"))
        with self.assertRaises(DimensionMismatch):
            differential_inner(F, parse_map("[x, y]", 3))

    def test_circle_family_hessian_norm(self):
        """|Hess(x G_k)|^2 = 8k^2 + 4k^4 on S^1."""
        for k in range(1, 5):
            F = x_times_g(circle_harmonics(k))
            self.assertEqual(
                hessian_norm_squared(F).normal_form(), 8 * k * k + 4 * k**4
            )

    def test_circle_family_push_gradient(self):
        """dF(grad |dF|^2) = 4k(k+1)(1+k+k^2) F on S^1 for F = x G_k."""
        for k in range(1, 5):
            F = x_times_g(circle_harmonics(k))
            pushed = push_gradient(F, grad_norm_squared(F)).normal_form()
            coefficient = 4 * k * (k + 1) * (1 + k + k * k)
            self.assertEqual(pushed, F.normal_form().scale(coefficient))

    def test_veronese_family_push_gradient(self):
        """m = 2, k = 2: |dF|^2 = 17 on S^2 and dF(grad |dF|^2) = 204 F."""
        m, k = 2, 2
        F = x_times_g(named_form("veronese").map)
        self.assertEqual(grad_norm_squared(F).normal_form(), 17)
        pushed = push_gradient(F, grad_norm_squared(F)).normal_form()
        coefficient = 2 * k * (k + 1) * (m + 2 * k + 1 + k * (m + 2 * k - 1))
        self.assertEqual(coefficient, 204)
        self.assertEqual(pushed, F.normal_form().scale(coefficient))

    def test_radial_derivative_per_block(self):
        """The radial derivative counts the degree in the chosen block only."""
        x1, x2, x3 = (Polynomial.variable(i, 3) for i in range(3))
        p = x1 * x1 * x3
        self.assertEqual(radial_derivative(p), p * 3)
        self.assertEqual(radial_derivative(p, blocks=(2, 1), block=0), p * 2)
        self.assertEqual(radial_derivative(p, blocks=(2, 1), block=1), p)

    def test_sphere_laplacian_of_coordinates(self):
        """Coordinates of S^m are eigenfunctions with eigenvalue m."""
        for m in (1, 2, 3):
            x = Polynomial.variable(0, m + 1)
            self.assertEqual(sphere_laplacian(x, m).normal_form(), x * m)

    def test_sphere_laplacian_of_circle_harmonics(self):
        """Re z^k on S^1 has eigenvalue k^2."""
        for k in range(1, 5):
            P = circle_harmonics(k)[0]
            self.assertEqual(
                sphere_laplacian(P, 1).normal_form(), P.normal_form() * k * k
            )

    def test_energy_density_of_identity(self):
        """e(id) = m / 2."""
        F = named_form("identity:3").map
        meta = sphere_restriction_check(F)
        self.assertEqual(energy_density(F, meta), Fraction(3, 2))

    def test_orthogonal_matrices(self):
        """Cayley matrices are orthogonal and rotating the target keeps the norm."""
        rotation = cayley_orthogonal(4, seed=7)
        self.assertTrue(is_orthogonal(rotation))
        self.assertFalse(is_orthogonal([[1, 1], [0, 1]]))
        F = named_form("hopf").map
        rotated = apply_linear_map(F, cayley_orthogonal(3, seed=3))
        self.assertEqual(rotated.norm_squared(), F.norm_squared())


class SphereRestrictionTestCase(TestCase):
    """Test cases for sphere_restriction_check."""

    def test_homogeneous_forms(self):
        """Veronese and quad-f1 are recognised as quadratic forms with their radii."""
        meta = sphere_restriction_check(named_form("veronese").map)
        self.assertEqual(meta, HomogeneousMeta(m=2, k=2, r_sq=RadicalScalar.one()))
        meta = sphere_restriction_check(named_form("quad-f1").map)
        self.assertEqual(meta.k, 2)
        self.assertEqual(meta.r_sq, Fraction(3, 4))

    def test_mixed_example_is_diagonal(self):
        """The mixed example splits after four components with radii 3/4 and 1/4."""
        meta = sphere_restriction_check(named_form("mixed").map)
        self.assertIsInstance(meta, DiagonalMeta)
        self.assertEqual((meta.k1, meta.k2, meta.split), (2, 4, 4))
        self.assertEqual(meta.r1_sq, Fraction(3, 4))
        self.assertEqual(meta.r2_sq, Fraction(1, 4))

    def test_product_maps(self):
        """A product map is recognised with blocks (2, 2)."""
        F, meta = product_map(circle_harmonics(1), circle_harmonics(2), Fraction(1, 2))
        self.assertEqual(sphere_restriction_check(F), meta)
        self.assertIsInstance(meta, ProductMeta)
        self.assertEqual(meta.blocks, (2, 2))

    def test_kind_hint_restricts_the_search(self):
        """A product hint does not fall back to the homogeneous pattern."""
        F = named_form("veronese").map
        with self.assertRaises(NotASphereMap):
            sphere_restriction_check(F, MapKind.PRODUCT)

    def test_rejects_non_sphere_maps(self):
        """[x, y^2] matches no restriction pattern."""
        with self.assertRaises(NotASphereMap):
            sphere_restriction_check(parse_map("[x, y^2]"))

    def test_radii_must_sum_to_one(self):
        """Two unit forms stacked without rescaling land on a radius sqrt 2 sphere."""
        with self.assertRaises(RadiiDoNotSumToOne):
            sphere_restriction_check(parse_map("[x, y, x^2 - y^2, 2*x*y]"))

    def test_declared_metadata_is_reverified(self):
        """Metadata with the wrong radius fails re-verification."""
        F = named_form("veronese").map
        wrong = HomogeneousMeta(m=2, k=2, r_sq=RadicalScalar.rational(2))
        with self.assertRaises(NotASphereMap):
            sphere_restriction_check(F, wrong)

    def test_form_signature(self):
        """quart-f2 has signature (4, 1/4); constants have none."""
        F = named_form("quart-f2").map
        self.assertEqual(form_signature(F.components), (4, Fraction(1, 4)))
        self.assertIsNone(form_signature(constant_map([1], 2).components))
