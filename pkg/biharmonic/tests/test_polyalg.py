from fractions import Fraction
from unittest import TestCase

from biharmonic.errors import (
    DimensionMismatch,
    RadiusNotRepresentable,
    UnsupportedDivision,
)
from biharmonic.polyalg import (
    Polynomial,
    RadicalScalar,
    sqrt_of_rational,
    squarefree_decomposition,
)


def _vars(n):
    return [Polynomial.variable(i, n) for i in range(n)]


class RadicalScalarTestCase(TestCase):
    """Test cases for exact radical scalars."""

    def test_square_factors_are_pulled_out(self):
        """sqrt(8) is stored as 2*sqrt(2)."""
        self.assertEqual(RadicalScalar.sqrt(8), RadicalScalar.sqrt(2) * 2)
        self.assertEqual(squarefree_decomposition(72), (6, 2))

    def test_products_of_radicals(self):
        """sqrt(2) * sqrt(3) = sqrt(6) and sqrt(2)^2 = 2."""
        root_two, root_three = RadicalScalar.sqrt(2), RadicalScalar.sqrt(3)
        self.assertEqual(root_two * root_three, RadicalScalar.sqrt(6))
        self.assertEqual(root_two * root_two, 2)
        self.assertTrue((root_two * root_two).is_rational())

    def test_inverse_of_single_term(self):
        """1/sqrt(2) = sqrt(2)/2."""
        inverse = RadicalScalar.sqrt(2).inverse()
        self.assertEqual(inverse, RadicalScalar.sqrt(2) * Fraction(1, 2))
        three_quarters = RadicalScalar.rational(Fraction(3, 4))
        self.assertEqual(three_quarters.inverse(), Fraction(4, 3))

    def test_inverse_of_multi_term_is_rejected(self):
        """1 + sqrt(2) cannot be inverted within single-term division."""
        with self.assertRaises(UnsupportedDivision):
            (1 + RadicalScalar.sqrt(2)).inverse()
        with self.assertRaises(UnsupportedDivision):
            RadicalScalar.zero().inverse()

    def test_string_form(self):
        """Canonical text uses the CLI grammar."""
        self.assertEqual(str(RadicalScalar.sqrt(2) * Fraction(3, 2)), "3/2*sqrt(2)")
        self.assertEqual(str(RadicalScalar.sqrt(2)), "sqrt(2)")
        self.assertEqual(str(1 - RadicalScalar.sqrt(2)), "1 - sqrt(2)")
        self.assertEqual(str(RadicalScalar.zero()), "0")

    def test_sqrt_of_rational(self):
        """sqrt(3/4) = sqrt(3)/2 and sqrt(1/2) = sqrt(2)/2."""
        self.assertEqual(
            sqrt_of_rational(Fraction(3, 4)), RadicalScalar.sqrt(3) * Fraction(1, 2)
        )
        self.assertEqual(
            sqrt_of_rational(Fraction(1, 2)), RadicalScalar.sqrt(2) * Fraction(1, 2)
        )
        self.assertEqual(sqrt_of_rational(Fraction(1, 4)), Fraction(1, 2))

    def test_sqrt_outside_the_ring(self):
        """Negative and irrational radicands are rejected."""
        with self.assertRaises(RadiusNotRepresentable):
            RadicalScalar.sqrt(-1)
        with self.assertRaises(RadiusNotRepresentable):
            sqrt_of_rational(RadicalScalar.sqrt(2))

    def test_float_conversion(self):
        """3 sqrt(2) converts to the nearest double."""
        self.assertAlmostEqual(float(RadicalScalar.sqrt(2) * 3), 4.242640687119285)

    def test_hash_matches_rationals(self):
        """Rational scalars hash like the Fraction they equal."""
        half = RadicalScalar.rational(Fraction(1, 2))
        self.assertEqual(hash(half), hash(Fraction(1, 2)))


class PolynomialTestCase(TestCase):
    """Test cases for sparse polynomials."""

    def test_zero_terms_are_dropped(self):
        """Cancelled monomials leave no zero coefficients behind."""
        x, y = _vars(2)
        self.assertTrue((x * y - y * x).is_zero())
        self.assertEqual(len(x + y - x), 1)

    def test_nvars_must_agree(self):
        """Polynomials in different rings do not add."""
        with self.assertRaises(DimensionMismatch):
            Polynomial.variable(0, 2) + Polynomial.variable(0, 3)

    def test_partial_and_euler(self):
        """d/dx x^3 = 3x^2; the Euler operator multiplies by the degree."""
        x, y = _vars(2)
        self.assertEqual((x**3).partial(0), x * x * 3)
        self.assertEqual((x * x * y).euler_operator(), x * x * y * 3)
        self.assertEqual((x * x * y).euler_operator([0]), x * x * y * 2)

    def test_homogeneous_degree(self):
        """Mixed degrees and the zero polynomial have no homogeneous degree."""
        x, y = _vars(2)
        self.assertEqual((x * x + x * y).homogeneous_degree(), 2)
        self.assertIsNone((x * x + y).homogeneous_degree())
        self.assertIsNone(Polynomial.zero(2).homogeneous_degree())

    def test_exact_evaluation(self):
        """x + sqrt(2) y at (1, sqrt(2)) is exactly 3."""
        x, y = _vars(2)
        p = x + y * RadicalScalar.sqrt(2)
        self.assertEqual(p.evaluate([1, RadicalScalar.sqrt(2)]), 3)
        self.assertAlmostEqual(p.evaluate([1.0, 2.0]), 1 + 2 * 2**0.5)

    def test_normal_form_on_the_sphere(self):
        """x1^2 reduces to 1 - x2^2 modulo x1^2 + x2^2 - 1."""
        x, y = _vars(2)
        self.assertEqual((x * x).normal_form(), 1 - y * y)
        self.assertEqual(str((x * x).normal_form()), "-x2^2 + 1")
        self.assertEqual(Polynomial.radius_squared(2).normal_form(), 1)

    def test_normal_form_per_block(self):
        """On S^1 x S^1 each block reduces on its own."""
        x1, x2, x3, x4 = _vars(4)
        p = x1 * x1 * x3 * x3
        reduced = p.normal_form((2, 2))
        self.assertEqual(reduced, (1 - x2 * x2) * (1 - x4 * x4))

    def test_divide_by_radius_squared(self):
        """Exact division by the radius works; x^3 is not divisible; 0 / r^2 = 0."""
        x, y = _vars(2)
        radius = Polynomial.radius_squared(2)
        self.assertEqual((radius * x).divide_by_radius_squared(), x)
        self.assertIsNone((x**3).divide_by_radius_squared())
        zero = Polynomial.zero(2)
        self.assertEqual(zero.divide_by_radius_squared(), zero)

    def test_embed(self):
        """x1 placed at offset 1 in three variables is x2."""
        self.assertEqual(
            Polynomial.variable(0, 1).embed(3, 1), Polynomial.variable(1, 3)
        )
        with self.assertRaises(DimensionMismatch):
            Polynomial.variable(0, 2).embed(2, 1)

    def test_string_form(self):
        """Printed polynomials use the input grammar with radical coefficients."""
        x, y = _vars(2)
        p = x * x * 3 - x * y * RadicalScalar.sqrt(2) + Fraction(1, 2)
        self.assertEqual(str(p), "3*x1^2 - sqrt(2)*x1*x2 + 1/2")
        self.assertEqual(str(x * (1 + RadicalScalar.sqrt(2))), "(1 + sqrt(2))*x1")
