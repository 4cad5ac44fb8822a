import mpmath as mp
from django.test import SimpleTestCase

from holonomic.recurrence import INITIAL_TERMS, extend

from .estimates import (
    DEFAULT_N_VALUES, MissingCoefficient, constants, convergence_report,
    estimate, local_coefficient_from_equation, log_magnitude, singular_point,
)
from .serializers import AsymptQuerySerializer, float_text


class ConstantsTests(SimpleTestCase):
    def setUp(self):
        self.consts = constants()
        self.sqrt3 = mp.sqrt(3)

    def test_closed_forms(self):
        c, sqrt3 = self.consts, self.sqrt3
        self.assertLess(abs(c.z0 - mp.mpf(2) / 11 * (3 * sqrt3 - 4)), 1e-12)
        self.assertLess(abs(c.S0 - (1 + sqrt3 / 2)), 1e-12)
        self.assertLess(abs(c.growth - (2 + 1.5 * sqrt3)), 1e-12)
        self.assertLess(abs(c.amplitude - mp.sqrt(2 + 8 * sqrt3 / 9) / (2 * mp.sqrt(mp.pi))), 1e-12)

    def test_decimal_values(self):
        self.assertAlmostEqual(float(self.consts.z0), 0.2174819976, places=10)
        self.assertAlmostEqual(float(self.consts.growth), 4.5980762114, places=10)
        self.assertAlmostEqual(float(self.consts.amplitude), 0.5307, places=4)

    def test_growth_is_the_reciprocal_of_z0(self):
        self.assertLess(abs(self.consts.growth * self.consts.z0 - 1), 1e-14)

    def test_bisection_agrees_with_the_closed_form(self):
        self.assertLess(abs(singular_point() - self.consts.z0), 1e-12)

    def test_local_coefficient(self):
        c = self.consts
        derived = local_coefficient_from_equation(c.z0, c.S0)
        self.assertLess(abs(derived - c.local_coefficient), 1e-12)
        self.assertAlmostEqual(float(-1 / c.local_coefficient), float(8 + 43 * self.sqrt3 / 9), places=10)

    def test_amplitude_follows_from_the_local_expansion(self):
        c = self.consts
        from_expansion = mp.sqrt(-c.z0 / c.local_coefficient) / (2 * mp.sqrt(mp.pi))
        self.assertLess(abs(from_expansion - c.amplitude), 1e-12)


class EstimateTests(SimpleTestCase):
    def test_first_term(self):
        c = constants()
        self.assertLess(abs(estimate(1) - c.amplitude * c.growth), 1e-12)

    def test_large_n_does_not_overflow(self):
        value = estimate(20000)
        self.assertTrue(mp.isfinite(value))
        self.assertGreater(value, mp.mpf(10) ** 13000)

    def test_n_must_be_positive(self):
        with self.assertRaises(ValueError):
            estimate(0)

    def test_ratio_near_one(self):
        seq = extend(INITIAL_TERMS, 1000)
        ratio_100 = mp.exp(log_magnitude(seq[100]) - constants().log_estimate(100))
        ratio_1000 = mp.exp(log_magnitude(seq[1000]) - constants().log_estimate(1000))
        self.assertTrue(0.9 <= ratio_100 <= 1.1, ratio_100)
        self.assertTrue(0.99 <= ratio_1000 <= 1.01, ratio_1000)


class LogMagnitudeTests(SimpleTestCase):
    def test_small_and_large_values(self):
        self.assertLess(abs(log_magnitude(3852) - mp.log(3852)), 1e-12)
        exact = 900 * mp.log(7)
        self.assertLess(abs(log_magnitude(7 ** 900) / exact - 1), 1e-12)

    def test_rejects_non_positive_values(self):
        for value in (0, -5, True, 2.5):
            with self.assertRaises(ValueError):
                log_magnitude(value)


class ConvergenceReportTests(SimpleTestCase):
    def test_deviation_shrinks(self):
        rows = convergence_report(DEFAULT_N_VALUES)
        self.assertEqual([row.n for row in rows], list(DEFAULT_N_VALUES))
        deviations = [row.deviation for row in rows]
        for before, after in zip(deviations, deviations[1:]):
            self.assertLess(after, before)
        self.assertLess(rows[-1].deviation, 0.01)

    def test_rows_carry_exact_coefficients(self):
        rows = convergence_report([5, 9])
        self.assertEqual([row.coefficient for row in rows], [71, 15183])

    def test_empty_request(self):
        self.assertEqual(convergence_report([]), [])

    def test_missing_coefficient(self):
        with self.assertRaises(MissingCoefficient) as ctx:
            convergence_report([10], coefficients=[1, 1, 2, 6])
        self.assertEqual(ctx.exception.n, 10)


class QuerySerializerTests(SimpleTestCase):
    def test_limits(self):
        self.assertTrue(AsymptQuerySerializer(data={'n': [50, 100]}).is_valid())
        self.assertFalse(AsymptQuerySerializer(data={'n': list(range(1, 70))}).is_valid())
        self.assertFalse(AsymptQuerySerializer(data={'n': [20001]}).is_valid())
        self.assertFalse(AsymptQuerySerializer(data={'n': [0]}).is_valid())

    def test_float_text(self):
        self.assertEqual(float_text(mp.mpf('0.5')), '0.5')
