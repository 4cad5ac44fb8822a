from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from .algebraic import AlgEquation, residual, solve_algebraic
from .equations import A128728, A128729, CATALAN, TRANSFORMED_U_CUBIC, avoidance_equation
from .exceptions import DivisionByNonUnit, NotARoot, RingMismatch, SingularRoot
from .rings import RATIONALS, TPOLYS, T, TPoly, exact_str, normalize, parse_exact
from .serializers import SeriesPayload, parse_t_eval, render_json
from .zseries import ZSeries

small_ints = st.integers(min_value=-20, max_value=20)
tpolys = st.lists(small_ints, max_size=4).map(TPoly)
small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series_triples(draw, coefficients, ring):
    order = draw(st.integers(min_value=1, max_value=16))
    values = st.lists(coefficients, min_size=order, max_size=order)
    return tuple(ZSeries(draw(values), ring) for _ in range(3))


class RationalTests(SimpleTestCase):
    def test_integral_fraction_collapses_to_int(self):
        value = normalize(Fraction(6, 3))
        self.assertEqual(value, 2)
        self.assertIsInstance(value, int)

    def test_booleans_and_floats_are_rejected(self):
        with self.assertRaises(TypeError):
            normalize(True)
        with self.assertRaises(TypeError):
            normalize(0.5)

    def test_exact_strings(self):
        self.assertEqual(exact_str(Fraction(-3, 4)), '-3/4')
        self.assertEqual(exact_str(12), '12')
        self.assertEqual(parse_exact(' 10/4 '), Fraction(5, 2))


class TPolyTests(SimpleTestCase):
    def test_trailing_zeros_are_trimmed(self):
        self.assertEqual(TPoly((1, 2, 0, 0)).coeffs, (1, 2))
        self.assertEqual(TPoly((0, 0)).degree, -1)
        self.assertFalse(TPoly())

    def test_arithmetic(self):
        p = 1 + T
        self.assertEqual(p * p, TPoly((1, 2, 1)))
        self.assertEqual(p ** 3, TPoly((1, 3, 3, 1)))
        self.assertEqual(p - T, 1)
        self.assertEqual(3 - p, TPoly((2, -1)))
        self.assertEqual(-p, TPoly((-1, -1)))

    def test_evaluate_and_total(self):
        p = TPoly((71, 64, 2))
        self.assertEqual(p.evaluate(0), 71)
        self.assertEqual(p.evaluate(1), 137)
        self.assertEqual(p.total(), 137)
        self.assertEqual(p.evaluate(Fraction(1, 2)), Fraction(207, 2))

    def test_text_and_json(self):
        self.assertEqual(str(TPoly((71, 64, 2))), '71 + 64*t + 2*t^2')
        self.assertEqual(str(TPoly((0, 1))), 't')
        self.assertEqual(TPoly().to_json(), ['0'])
        self.assertEqual(TPoly((1, Fraction(1, 3))).to_json(), ['1', '1/3'])

    def test_negative_power_is_refused(self):
        with self.assertRaises(ValueError):
            T ** -1

    @given(tpolys, tpolys, tpolys)
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a + b) * c, a * c + b * c)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a - a, TPoly())

    @given(tpolys, tpolys, st.integers(min_value=-5, max_value=5))
    def test_evaluation_is_a_ring_map(self, a, b, t):
        self.assertEqual((a * b).evaluate(t), a.evaluate(t) * b.evaluate(t))
        self.assertEqual((a + b).evaluate(t), a.evaluate(t) + b.evaluate(t))


class RingTests(SimpleTestCase):
    def test_rationals_reject_polynomials_in_t(self):
        self.assertEqual(RATIONALS.coerce(TPoly((4,))), 4)
        with self.assertRaises(RingMismatch):
            RATIONALS.coerce(T)

    def test_units(self):
        self.assertTrue(TPOLYS.is_unit(TPoly((2,))))
        self.assertFalse(TPOLYS.is_unit(T))
        self.assertEqual(TPOLYS.inverse(TPoly((2,))), TPoly((Fraction(1, 2),)))
        self.assertEqual(RATIONALS.inverse(Fraction(2, 3)), Fraction(3, 2))


class ZSeriesTests(SimpleTestCase):
    def test_order_is_the_number_of_known_coefficients(self):
        s = ZSeries([1, 2], order=5)
        self.assertEqual(s.order, 5)
        self.assertEqual(s[4], 0)
        with self.assertRaises(IndexError):
            s[5]

    def test_binary_operations_keep_the_smaller_order(self):
        a = ZSeries([1, 1, 1, 1, 1])
        b = ZSeries([1, -1, 0])
        self.assertEqual((a * b).order, 3)
        self.assertEqual((a + b).order, 3)

    def test_geometric_series(self):
        one_minus_z = ZSeries([1, -1], order=6)
        self.assertEqual((1 / one_minus_z).coeffs, (1, 1, 1, 1, 1, 1))

    def test_division_strips_a_common_power_of_z(self):
        num = ZSeries([0, 0, 1, 1, 0, 0])
        den = ZSeries([0, 0, 1, 0, 0, 0])
        quotient = num.div(den)
        self.assertEqual(quotient.coeffs, (1, 1, 0, 0))

    def test_division_by_non_units(self):
        with self.assertRaises(DivisionByNonUnit):
            ZSeries([0, 1, 0]).div(ZSeries([0, 0, 1]))
        with self.assertRaises(DivisionByNonUnit):
            ZSeries([1, 0], TPOLYS).div(ZSeries([T, 1], TPOLYS))
        with self.assertRaises(DivisionByNonUnit):
            ZSeries([1, 0]).div(ZSeries.zero(2))

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatch):
            ZSeries([1]) + ZSeries([1], TPOLYS)
        with self.assertRaises(RingMismatch):
            ZSeries([1, 2]).evaluate_t(1)

    def test_shift_compress_and_derivative(self):
        s = ZSeries([1, 2, 3])
        self.assertEqual(s.shift(2).coeffs, (0, 0, 1, 2, 3))
        self.assertEqual(s.shift(2).shift(-2), s)
        self.assertEqual(s.derivative().coeffs, (2, 6))
        self.assertEqual(ZSeries([1, 0, 5, 0, 7]).compress(2).coeffs, (1, 5, 7))
        with self.assertRaises(ValueError):
            s.compress(2)
        self.assertEqual(s.compress(2, strict=False).coeffs, (1, 3))

    def test_valuation(self):
        self.assertEqual(ZSeries([0, 0, 3]).valuation(), 2)
        self.assertEqual(ZSeries.zero(4).valuation(), 4)

    def test_evaluate_t_and_lift(self):
        s = ZSeries([1, T, 1 + T], TPOLYS)
        self.assertEqual(s.evaluate_t(2).coeffs, (1, 2, 3))
        self.assertEqual(ZSeries([1, 2]).lift().ring, TPOLYS)

    def test_negative_power(self):
        s = ZSeries([1, 1], order=4)
        self.assertEqual((s ** -1).coeffs, (1, -1, 1, -1))

    def test_json(self):
        s = ZSeries([1, Fraction(1, 2)])
        self.assertEqual(s.to_json(), ['1', '1/2'])
        self.assertEqual(ZSeries([1 + T], TPOLYS).to_json(), [['1', '1']])
        self.assertEqual(ZSeries.from_json(['1', '1/2']), s)

    @given(st.lists(small_ints, min_size=1, max_size=8), st.lists(small_ints, min_size=1, max_size=8))
    def test_product_then_quotient(self, a, b):
        b[0] = b[0] or 1
        n = min(len(a), len(b))
        left, right = ZSeries(a), ZSeries(b)
        self.assertEqual((left * right).div(right), left.truncate(n))

    def assert_ring_axioms(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual((a + b) * c, a * c + b * c)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertTrue((a - a).is_zero())

    @settings(deadline=None)
    @given(series_triples(small_fractions, RATIONALS))
    def test_ring_axioms_over_rationals(self, triple):
        self.assert_ring_axioms(*triple)

    @settings(deadline=None)
    @given(series_triples(tpolys, TPOLYS))
    def test_ring_axioms_over_tpolys(self, triple):
        self.assert_ring_axioms(*triple)


class SolverTests(SimpleTestCase):
    def test_avoidance_series(self):
        s = solve_algebraic(A128729, 1, 9)
        self.assertEqual(list(s.coeffs), [1, 1, 2, 6, 20, 71, 262, 994, 3852])

    def test_marked_series(self):
        s = solve_algebraic(A128728, 1, 7)
        expected = [(1,), (1,), (2, 1), (6, 4), (20, 16), (71, 64, 2), (262, 261, 20)]
        self.assertEqual([c.coeffs for c in s.coeffs], expected)

    def test_totals_at_t_one(self):
        s = solve_algebraic(A128728, 1, 7).evaluate_t(1)
        self.assertEqual(list(s.coeffs), [1, 1, 3, 10, 36, 137, 543])

    def test_t_zero_collapses_to_avoidance(self):
        self.assertEqual(
            solve_algebraic(A128728, 1, 20).evaluate_t(0),
            solve_algebraic(A128729, 1, 20),
        )

    def test_cubic_solutions_are_integral(self):
        self.assertTrue(solve_algebraic(A128729, 1, 60).is_integral())
        self.assertTrue(solve_algebraic(A128728, 1, 40).is_integral())
        self.assertTrue(solve_algebraic(TRANSFORMED_U_CUBIC, 1, 40).is_integral())

    def test_marked_degree_bound(self):
        # a semilength-n path has 2n steps, at most 2n // 3 of them start an up-down-red
        s = solve_algebraic(A128728, 1, 20)
        for n, c in enumerate(s.coeffs):
            self.assertLessEqual(c.degree, 2 * n // 3, n)
            self.assertLessEqual(c.degree, n, n)

    def test_catalan(self):
        self.assertEqual(list(solve_algebraic(CATALAN, 1, 7).coeffs), [1, 1, 2, 5, 14, 42, 132])

    def test_all_methods_agree(self):
        results = [solve_algebraic(A128729, 1, 25, method=m) for m in ('newton', 'newton-linear', 'undetermined')]
        self.assertEqual(results[0], results[1])
        self.assertEqual(results[0], results[2])

    @override_settings(SKEW_SERIES_SOLVER='undetermined')
    def test_default_method_follows_settings(self):
        self.assertEqual(solve_algebraic(A128728, 1, 7)[5], TPoly((71, 64, 2)))

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            solve_algebraic(A128729, 1, 5, method='bisection')

    def test_not_a_root(self):
        with self.assertRaises(NotARoot):
            solve_algebraic(A128729, 2, 5)

    def test_singular_root(self):
        # (S - 1)^2 - z
        eq = AlgEquation.from_terms({(2, 0): 1, (1, 0): -2, (0, 0): 1, (0, 1): -1})
        with self.assertRaises(SingularRoot):
            solve_algebraic(eq, 1, 5)

    def test_vanishing_leading_coefficient(self):
        with self.assertRaises(ValueError):
            AlgEquation(((1,), (0, 0)))

    def test_residuals(self):
        self.assertTrue(residual(A128729, solve_algebraic(A128729, 1, 30)).is_zero())
        self.assertEqual(list(residual(A128729, ZSeries.one(5)).coeffs), [0, -1, 2, 0, 0])

    def test_named_equations(self):
        self.assertIs(avoidance_equation(), A128729)
        self.assertIs(avoidance_equation(track_t=True), A128728)
        self.assertEqual(TRANSFORMED_U_CUBIC.degree, 3)


class PayloadTests(SimpleTestCase):
    def test_t_eval_parsing(self):
        self.assertTrue(parse_t_eval('track').is_track)
        self.assertEqual(parse_t_eval('zero').value, 0)
        self.assertEqual(parse_t_eval('ONE').value, 1)
        self.assertEqual(parse_t_eval('2/4').value, Fraction(1, 2))
        self.assertEqual(str(parse_t_eval('2/4')), '1/2')
        with self.assertRaises(ValueError):
            parse_t_eval('sometimes')

    def test_payload_json_is_compact_and_exact(self):
        payload = SeriesPayload([1, TPoly((2, 1)), Fraction(1, 3)], 'z(half)', 'track')
        self.assertEqual(
            render_json(payload.data()),
            b'{"sequence":["1",["2","1"],"1/3"],"variable":"z(half)","t_mode":"track"}',
        )

    @settings(deadline=None)
    @given(st.integers(min_value=1, max_value=12))
    def test_half_length_prefixes_are_stable(self, order):
        longer = solve_algebraic(A128729, 1, order + 3)
        self.assertEqual(solve_algebraic(A128729, 1, order), longer.truncate(order))
