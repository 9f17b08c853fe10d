from fractions import Fraction
from unittest import TestCase

from biharmonic.cli.parser import parse_map
from biharmonic.constructors import (
    GALLERY,
    circle_harmonics,
    diagonal_sum,
    gallery_names,
    hopf_isometry_transform,
    identity_map,
    named_form,
    product_map,
    radial_multiple,
    x_times_g,
)
from biharmonic.constructors.forms import hopf_isometry_matrix
from biharmonic.errors import (
    DimensionMismatch,
    InvalidArgument,
    NotAForm,
    UnknownName,
)
from biharmonic.maps import (
    DiagonalMeta,
    HomogeneousMeta,
    ProductMeta,
    constant_map,
    grad_norm_squared,
    is_orthogonal,
    sphere_restriction_check,
)
from biharmonic.polyalg import Polynomial, RadicalScalar


class FormsTestCase(TestCase):
    """Test cases for the elementary constructions."""

    def test_circle_harmonics(self):
        """G_3 = (x^3 - 3xy^2, 3x^2y - y^3)."""
        expected = parse_map("[x^3 - 3*x*y^2, 3*x^2*y - y^3]")
        self.assertEqual(circle_harmonics(3), expected)
        with self.assertRaises(InvalidArgument):
            circle_harmonics(0)

    def test_circle_energy(self):
        """|dG_k|^2 = 2k^2 |x|^(2k-2)."""
        radius = Polynomial.radius_squared(2)
        for k in range(1, 6):
            self.assertEqual(
                grad_norm_squared(circle_harmonics(k)), radius ** (k - 1) * (2 * k * k)
            )

    def test_x_times_g(self):
        """x * G_1 is the unit quadratic [x^2, xy, xy, y^2]; non-forms are refused."""
        F = x_times_g(circle_harmonics(1))
        self.assertEqual(F, parse_map("[x^2, x*y, x*y, y^2]"))
        meta = sphere_restriction_check(F)
        self.assertEqual(meta, HomogeneousMeta(m=1, k=2, r_sq=RadicalScalar.one()))
        with self.assertRaises(NotAForm):
            x_times_g(parse_map("[x, y^2]"))

    def test_radial_multiple(self):
        """Radial multiples agree with F on the sphere; p = 0 is F and p < 0 fails."""
        F = radial_multiple(identity_map(2), 1)
        self.assertEqual(F.normal_form(), identity_map(2))
        self.assertIs(radial_multiple(F, 0), F)
        with self.assertRaises(InvalidArgument):
            radial_multiple(F, -1)

    def test_hopf_isometry(self):
        """The circle curve x*G_k becomes (1/sqrt2)(|z|^2 z^(k-1), z^(k+1))."""
        self.assertTrue(is_orthogonal(hopf_isometry_matrix()))
        half_root_two = RadicalScalar.sqrt(2) * Fraction(1, 2)
        radius = Polynomial.radius_squared(2)
        for k in (2, 3):
            transformed = hopf_isometry_transform(x_times_g(circle_harmonics(k)))
            expected = (
                circle_harmonics(k - 1)
                .scale(radius)
                .concat(circle_harmonics(k + 1))
                .scale(half_root_two)
            )
            self.assertEqual(transformed, expected)
        with self.assertRaises(DimensionMismatch):
            hopf_isometry_transform(identity_map(2))

    def test_hopf_isometry_at_degree_one(self):
        """For k = 1 the lower block is the constant (|z|^2, 0)."""
        half_root_two = RadicalScalar.sqrt(2) * Fraction(1, 2)
        radius = Polynomial.radius_squared(2)
        expected = (
            constant_map([1, 0], 2)
            .scale(radius)
            .concat(circle_harmonics(2))
            .scale(half_root_two)
        )
        transformed = hopf_isometry_transform(x_times_g(circle_harmonics(1)))
        self.assertEqual(transformed, expected)


class SchemesTestCase(TestCase):
    """Test cases for diagonal and product constructions."""

    def test_diagonal_sum(self):
        """Two unit forms on one sphere give a unit diagonal with split metadata."""
        F, meta = diagonal_sum(circle_harmonics(1), circle_harmonics(2), Fraction(1, 2))
        self.assertIsInstance(meta, DiagonalMeta)
        self.assertEqual((meta.m, meta.k1, meta.k2, meta.split), (1, 1, 2, 2))
        self.assertEqual(meta.r2_sq, Fraction(1, 2))
        self.assertEqual(F.norm_squared().normal_form(), 1)

    def test_diagonal_radius_must_be_inside_the_interval(self):
        """r1^2 outside (0, 1) is rejected."""
        for r1_sq in (0, 1, Fraction(3, 2), -1):
            with self.assertRaises(InvalidArgument):
                diagonal_sum(circle_harmonics(1), circle_harmonics(2), r1_sq)

    def test_diagonal_factors_must_be_unit_forms(self):
        """Factors must be unit-radius forms in one shared domain."""
        with self.assertRaises(NotAForm):
            diagonal_sum(
                named_form("veronese").map, parse_map("[x, y^2, z]"), Fraction(1, 2)
            )
        with self.assertRaises(NotAForm):
            diagonal_sum(
                circle_harmonics(1).scale(2), circle_harmonics(1), Fraction(1, 2)
            )
        with self.assertRaises(DimensionMismatch):
            diagonal_sum(circle_harmonics(1), identity_map(2), Fraction(1, 2))

    def test_product_map(self):
        """The product of G_2 and id_S2 lives on R^5 with blocks (2, 3)."""
        F, meta = product_map(circle_harmonics(2), identity_map(2), Fraction(1, 4))
        self.assertIsInstance(meta, ProductMeta)
        self.assertEqual((meta.m1, meta.m2, meta.k1, meta.k2), (1, 2, 2, 1))
        self.assertEqual(meta.blocks, (2, 3))
        self.assertEqual(F.nvars, 5)
        self.assertEqual(len(F), 5)

    def test_product_radius_must_be_inside_the_interval(self):
        """r1^2 = 1 is rejected for products."""
        with self.assertRaises(InvalidArgument):
            product_map(circle_harmonics(1), identity_map(1), 1)


class GalleryTestCase(TestCase):
    """Test cases for the named-map registry."""

    def test_every_entry_is_verified(self):
        """Each gallery map re-verifies to its stored metadata."""
        for name in GALLERY:
            entry = named_form(name)
            self.assertEqual(sphere_restriction_check(entry.map), entry.meta, name)

    def test_parametric_names(self):
        """circle:<k> and identity:<m> build their maps; a non-integer suffix fails."""
        self.assertEqual(named_form("circle:3").map, circle_harmonics(3))
        self.assertEqual(named_form("identity:2").meta.m, 2)
        with self.assertRaises(InvalidArgument):
            named_form("circle:two")

    def test_aliases(self):
        """Long builder names resolve to the canonical registry names."""
        self.assertEqual(named_form("cck_degree3").name, "cck3")
        self.assertEqual(named_form("final_example_map").name, "final-map")

    def test_unknown_name(self):
        """An unknown name raises UnknownName listing the known names."""
        with self.assertRaises(UnknownName) as context:
            named_form("clifford")
        self.assertTrue(context.exception.error_details)

    def test_gallery_names(self):
        """Registry names come first, then the parametric patterns."""
        names = gallery_names()
        self.assertEqual(names[0], "veronese")
        self.assertIn("circle:<k>", names)
        self.assertIn("identity:<m>", names)

    def test_entry_dictionary(self):
        """to_dict carries the components, ring size and verified metadata."""
        data = named_form("quart-f2").to_dict()
        self.assertEqual(
            list(data), ["name", "components", "nvars", "meta", "provenance"]
        )
        self.assertEqual(data["nvars"], 4)
        self.assertEqual(len(data["components"]), 1)
        self.assertEqual(data["meta"], named_form("quart-f2").meta.to_dict())

    def test_mixed_metadata(self):
        """The mixed example is a diagonal of degrees 2 and 4."""
        meta = named_form("mixed").meta
        self.assertIsInstance(meta, DiagonalMeta)
        self.assertEqual((meta.k1, meta.k2), (2, 4))
