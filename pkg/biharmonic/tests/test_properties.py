"""Randomised algebraic properties, checked against sympy where a reference exists."""

from unittest import TestCase

import numpy as np
import pytest
import sympy

from biharmonic.cli.parser import parse_polynomial
from biharmonic.fields import classify, quadratic_triple_equivalence
from biharmonic.maps import (
    PolyMap,
    differential_inner,
    euclidean_laplacian,
    grad_norm_squared,
    hessian_norm_squared,
)
from biharmonic.numcheck import sample_sphere
from biharmonic.polyalg import Polynomial, RadicalScalar
from biharmonic.tests.factories import (
    QUADRATIC_FORMS,
    HomogeneousPolynomialFactory,
    PolynomialFactory,
    QuadraticSphereMapFactory,
    RadicalScalarFactory,
    SingleRadicalFactory,
    to_sympy,
)

CASES = 200


def _symbols(n):
    return sympy.symbols(f"x1:{n + 1}")


@pytest.mark.slow
class PolynomialPropertiesTestCase(TestCase):
    """Ring laws, calculus and sphere reduction on random polynomials."""

    def test_ring_laws(self):
        """(p + q) r = p r + q r and p - p = 0."""
        for _ in range(CASES):
            p = PolynomialFactory(nvars=3)
            q = PolynomialFactory(nvars=3)
            r = PolynomialFactory(nvars=3)
            self.assertEqual((p + q) * r, p * r + q * r)
            self.assertTrue((p - p).is_zero())
            self.assertEqual(p * q, q * p)

    def test_partials_match_sympy(self):
        """Every partial derivative agrees with sympy.diff."""
        for _ in range(CASES):
            p = PolynomialFactory()
            symbols = _symbols(p.nvars)
            expression = to_sympy(p, symbols)
            for i, symbol in enumerate(symbols):
                difference = to_sympy(p.partial(i), symbols) - sympy.diff(
                    expression, symbol
                )
                self.assertEqual(sympy.expand(difference), 0)

    def test_laplacian_matches_sympy(self):
        """euclidean_laplacian is minus the sum of pure second partials."""
        for _ in range(CASES):
            p = PolynomialFactory()
            symbols = _symbols(p.nvars)
            expression = to_sympy(p, symbols)
            expected = -sum(sympy.diff(expression, s, 2) for s in symbols)
            difference = to_sympy(euclidean_laplacian(p), symbols) - expected
            self.assertEqual(sympy.expand(difference), 0)

    def test_normal_form_is_a_remainder(self):
        """NF is idempotent, kills the sphere ideal and preserves values on S^m."""
        for index in range(CASES):
            p = PolynomialFactory()
            nvars = p.nvars
            reduced = p.normal_form()
            self.assertEqual(reduced.normal_form(), reduced)
            ideal = p * (Polynomial.radius_squared(nvars) - 1)
            self.assertTrue(ideal.normal_form().is_zero())
            samples = sample_sphere(nvars - 1, 8, seed=index)
            np.testing.assert_allclose(
                reduced.evaluate_many(samples.points),
                p.evaluate_many(samples.points),
                rtol=1e-9,
                atol=1e-9,
            )

    def test_canonical_text_parses_back(self):
        """parse_polynomial(str(p)) == p."""
        for _ in range(CASES):
            p = PolynomialFactory()
            self.assertEqual(parse_polynomial(str(p), p.nvars), p)

    def test_radius_division_inverts_multiplication(self):
        """(p |x|^2) / |x|^2 = p."""
        for _ in range(CASES):
            p = PolynomialFactory()
            product = p * Polynomial.radius_squared(p.nvars)
            self.assertEqual(product.divide_by_radius_squared(), p)

    def test_map_laplacian_is_componentwise(self):
        """The Laplacian of a map acts on each component."""
        for _ in range(CASES // 5):
            components = [PolynomialFactory(nvars=3) for _ in range(3)]
            F = PolyMap(components)
            self.assertEqual(
                euclidean_laplacian(F),
                PolyMap([euclidean_laplacian(c) for c in components]),
            )

    def test_flat_bochner_identity(self):
        """lap |dF|^2 = 2 <dF, d lap F> - 2 |Hess F|^2 with lap = -sum of d^2."""
        for _ in range(CASES // 4):
            F = PolyMap([PolynomialFactory(nvars=3) for _ in range(3)])
            self.assertEqual(
                euclidean_laplacian(grad_norm_squared(F)),
                differential_inner(F, euclidean_laplacian(F)) * 2
                - hessian_norm_squared(F) * 2,
            )

    def test_differential_inner_is_symmetric_and_bilinear(self):
        """<dF, dG> = <dG, dF> and <d(F + G), dH> = <dF, dH> + <dG, dH>."""
        for _ in range(CASES // 4):
            F, G, H = (
                PolyMap([PolynomialFactory(nvars=3) for _ in range(2)])
                for _ in range(3)
            )
            self.assertEqual(differential_inner(F, G), differential_inner(G, F))
            self.assertEqual(
                differential_inner(F + G, H),
                differential_inner(F, H) + differential_inner(G, H),
            )
            self.assertEqual(differential_inner(F, F), grad_norm_squared(F))


@pytest.mark.slow
class RadicalScalarPropertiesTestCase(TestCase):
    """Field laws of the radical scalars on random elements."""

    def test_addition_is_an_abelian_group(self):
        """a + b = b + a, (a + b) + c = a + (b + c), a + 0 = a and a - a = 0."""
        for _ in range(CASES):
            a, b, c = (RadicalScalarFactory() for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a + RadicalScalar.zero(), a)
            self.assertTrue((a - a).is_zero())

    def test_multiplication_is_commutative_and_associative(self):
        """a b = b a, (a b) c = a (b c) and 1 a = a."""
        for _ in range(CASES):
            a, b, c = (RadicalScalarFactory() for _ in range(3))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(RadicalScalar.one() * a, a)

    def test_multiplication_distributes(self):
        """a (b + c) = a b + a c."""
        for _ in range(CASES):
            a, b, c = (RadicalScalarFactory() for _ in range(3))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_single_terms_are_invertible(self):
        """q sqrt(n) times its inverse is 1, and division undoes multiplication."""
        for _ in range(CASES):
            a = SingleRadicalFactory()
            b = RadicalScalarFactory()
            self.assertEqual(a * a.inverse(), 1)
            self.assertEqual((b * a) / a, b)

    def test_float_value_is_a_ring_homomorphism(self):
        """float(a b) and float(a + b) agree with float arithmetic."""
        for _ in range(CASES):
            a, b = RadicalScalarFactory(), RadicalScalarFactory()
            self.assertAlmostEqual(float(a * b), float(a) * float(b), places=9)
            self.assertAlmostEqual(float(a + b), float(a) + float(b), places=9)

    def test_square_roots_square_back(self):
        """sqrt(n)^2 = n for every n <= 100; squarefree n keep their radicand."""
        for n in range(1, 101):
            root = RadicalScalar.sqrt(n)
            self.assertEqual(root * root, n)
            self.assertTrue(root.is_single_term())
            radicand = next(root.items())[0]
            if all(e == 1 for e in sympy.factorint(n).values()):
                self.assertEqual(radicand, n)
            else:
                self.assertLess(radicand, n)


@pytest.mark.slow
class EulerOperatorPropertiesTestCase(TestCase):
    """The Euler operator on random homogeneous polynomials."""

    def test_euler_operator_scales_by_degree(self):
        """sum_i x_i dp/dx_i = k p for p homogeneous of degree k."""
        for _ in range(CASES):
            p = HomogeneousPolynomialFactory()
            k = p.homogeneous_degree()
            self.assertIsNotNone(k)
            self.assertEqual(p.euler_operator(), p * k)
            expected = sum(
                (
                    Polynomial.variable(i, p.nvars) * p.partial(i)
                    for i in range(p.nvars)
                ),
                Polynomial.zero(p.nvars),
            )
            self.assertEqual(p.euler_operator(), expected)

    def test_euler_operator_on_a_block(self):
        """The Euler operator splits as a sum over complementary blocks."""
        for _ in range(CASES):
            p = HomogeneousPolynomialFactory()
            first = p.euler_operator(range(1))
            rest = p.euler_operator(range(1, p.nvars))
            self.assertEqual(first + rest, p.euler_operator())
            self.assertEqual(first, Polynomial.variable(0, p.nvars) * p.partial(0))


@pytest.mark.slow
class QuadraticSphereMapPropertiesTestCase(TestCase):
    """Rotated quadratic forms into the unit sphere, harmonic and not."""

    def test_triple_equivalence_and_route_agreement(self):
        """tau = 0, lap F = 0 and e = m + 1 agree; harmonic maps are biharmonic."""
        seen = set()
        for _ in range(60):
            case = QuadraticSphereMapFactory()
            F, meta = case.build()
            self.assertEqual((meta.k, meta.r_sq), (2, 1))
            triple = quadratic_triple_equivalence(F, meta)
            self.assertTrue(triple.consistent, case)
            report = classify(F, meta)
            self.assertTrue(report.route_agreement, case)
            self.assertEqual(report.is_harmonic, triple.tension_zero, case)
            if report.is_harmonic:
                self.assertTrue(report.is_biharmonic, case)
            seen.add(report.is_harmonic)
        self.assertEqual(seen, {True, False})

    def test_rotation_preserves_the_verdict(self):
        """Orthogonal changes of both coordinates do not change the verdict."""
        for _ in range(20):
            case = QuadraticSphereMapFactory()
            F, meta = case.build()
            base = QUADRATIC_FORMS[case.name]()
            self.assertEqual(classify(F, meta).verdict, classify(base).verdict, case)
