from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from kernel.generating_functions import KernelMode, level_zero_half_length
from series.algebraic import solve_algebraic
from series.equations import A128729
from series.zseries import ZSeries

from .recurrence import (
    INITIAL_TERMS, ODE, RECURRENCE, NonIntegralStep, extend, first_failure,
    ode_residual, recurrence_residual,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


class RecurrenceTests(SimpleTestCase):
    def test_extend(self):
        self.assertEqual(extend(INITIAL_TERMS, 8), [1, 1, 2, 6, 20, 71, 262, 994, 3852])
        self.assertEqual(extend(INITIAL_TERMS, 4)[4], 20)
        self.assertEqual(extend(INITIAL_TERMS, 3), [1, 1, 2, 6])

    def test_bad_initial_terms_fail_loudly(self):
        with self.assertRaises(NonIntegralStep) as ctx:
            extend((1, 1, 2, 7), 20)
        self.assertEqual(ctx.exception.n, 0)
        self.assertEqual((ctx.exception.numerator, ctx.exception.denominator), (1984, 80))
        self.assertEqual(ctx.exception.remainder, 64)

    def test_arguments_are_checked(self):
        with self.assertRaises(ValueError):
            extend((1, 1, 2), 8)
        with self.assertRaises(ValueError):
            extend(INITIAL_TERMS, 2)
        with self.assertRaises(TypeError):
            extend((1, 1, 2, 6.0), 8)

    def test_leading_coefficient_never_vanishes(self):
        self.assertTrue(all(RECURRENCE.coefficients(n)[4] for n in range(500)))

    def test_solver_series_satisfies_the_recurrence(self):
        seq = list(solve_algebraic(A128729, 1, 201).coeffs)
        residuals = recurrence_residual(seq)
        self.assertEqual(len(residuals), 197)
        self.assertIsNone(first_failure(residuals))

    def test_catalan_numbers_do_not(self):
        residuals = recurrence_residual(CATALAN)
        self.assertEqual(residuals[0], -96)
        self.assertEqual(first_failure(residuals), 0)

    def test_zero_sequence(self):
        self.assertEqual(recurrence_residual([0] * 10), [0] * 6)

    def test_short_sequence(self):
        with self.assertRaises(ValueError):
            recurrence_residual([1, 1, 2, 6])

    @given(st.integers(min_value=-50, max_value=50))
    def test_residual_is_linear(self, factor):
        seq = extend(INITIAL_TERMS, 20)
        scaled = [factor * s for s in seq]
        self.assertEqual(recurrence_residual(scaled), [0] * 17)

    def test_three_way_agreement(self):
        from_recurrence = extend(INITIAL_TERMS, 200)
        from_solver = list(solve_algebraic(A128729, 1, 201).coeffs)
        from_kernel = list(level_zero_half_length(201, KernelMode.UNIVARIATE).coeffs)
        self.assertEqual(from_recurrence, from_solver)
        self.assertEqual(from_recurrence, from_kernel)


class OdeTests(SimpleTestCase):
    def test_avoidance_series(self):
        result = ode_residual(solve_algebraic(A128729, 1, 30))
        self.assertEqual(result.order, 28)
        self.assertTrue(result.is_zero())

    def test_constant_one(self):
        result = ode_residual(ZSeries.one(8))
        self.assertEqual(list(result.coeffs), [-8, 16, 0, 0, 0, 0])

    def test_zero_series(self):
        result = ode_residual(ZSeries.zero(8))
        self.assertEqual(list(result.coeffs), [-8, 31, 0, 0, 0, 0])

    def test_operator_coefficients(self):
        self.assertEqual(ODE.b1, (8, -64, 111, 14, -88))
        self.assertEqual(ODE.b2, (0, 4, -32, 69, -20, -44))

    def test_order_is_checked(self):
        with self.assertRaises(ValueError):
            ode_residual(ZSeries.one(4))
