from django.test import SimpleTestCase

from automaton.layers import CountMode, Layer, count, layer_series
from series.algebraic import solve_algebraic
from series.equations import A128728, A128729
from series.rings import TPOLYS, TPoly
from series.zseries import ZSeries

from .generating_functions import (
    TRANSFORMED_KERNEL, KernelMode, boundary_constants, check_identity_total,
    kernel_equation, kernel_polynomial, kernel_residual, kernel_root, layer_gf,
    level_gf, level_zero_half_length, transformation_chain_residual,
)

UNI, BI = KernelMode.UNIVARIATE, KernelMode.BIVARIATE


class KernelRootTests(SimpleTestCase):
    def test_univariate_root(self):
        root = kernel_root(16, UNI)
        self.assertEqual(
            list(root.utilde.coeffs),
            [1, 0, -1, 0, -1, 0, -2, 0, -6, 0, -20, 0, -71, 0, -262, 0],
        )
        self.assertEqual(root.u1_terms()[:3], [(-1, 1), (1, -1), (3, -1)])

    def test_order_below_two_is_rejected(self):
        with self.assertRaises(ValueError):
            kernel_root(1)

    def test_residual_vanishes_in_both_modes(self):
        for mode in KernelMode:
            root = kernel_root(64, mode)
            self.assertTrue(kernel_residual(root.utilde, mode).is_zero(), mode)

    def test_residual_sees_a_wrong_root(self):
        utilde = kernel_root(20, UNI).utilde + ZSeries.monomial(5, 20)
        self.assertFalse(kernel_residual(utilde, UNI).is_zero())

    def test_bivariate_at_zero_is_univariate(self):
        self.assertEqual(kernel_root(30, BI).utilde.evaluate_t(0), kernel_root(30, UNI).utilde)

    def test_derived_equation_matches_the_hand_written_one(self):
        for mode in KernelMode:
            self.assertEqual(kernel_equation(mode), TRANSFORMED_KERNEL[mode])

    def test_marked_polynomial_carries_t_on_z4(self):
        self.assertEqual(kernel_polynomial(BI)[4, 0], TPoly((-1, 1)))
        self.assertEqual(kernel_polynomial(UNI)[4, 0], -1)


class BoundaryConstantTests(SimpleTestCase):
    def test_univariate_total(self):
        total = boundary_constants(18, UNI).total()
        self.assertEqual(
            [total[2 * i] for i in range(9)],
            [1, 1, 2, 6, 20, 71, 262, 994, 3852],
        )

    def test_bivariate_total(self):
        total = boundary_constants(10, BI).total()
        self.assertEqual(
            [total[2 * i] for i in range(5)],
            [TPoly((1,)), TPoly((1,)), TPoly((2, 1)), TPoly((6, 4)), TPoly((20, 16))],
        )

    def test_g0_matches_the_automaton(self):
        g0 = boundary_constants(12, UNI).g0
        dp = layer_series(Layer.G, 0, 12, forbid_udr=True).evaluate_t(0)
        self.assertEqual(g0, dp)
        self.assertEqual(g0[2], 1)

    def test_constants_are_integral(self):
        for mode in KernelMode:
            constants = boundary_constants(24, mode)
            for series in (constants.g0, constants.h0, constants.k0):
                self.assertTrue(series.is_integral())


class LevelGfTests(SimpleTestCase):
    def test_level_zero_is_the_boundary_total(self):
        self.assertEqual(level_gf(0, 18, UNI), boundary_constants(18, UNI).total())

    def test_single_up_step(self):
        self.assertEqual(level_gf(1, 6, UNI)[1], 1)

    def test_track_mode_against_the_automaton(self):
        self.assertEqual(level_gf(2, 8, BI)[6], count(6, 2, CountMode.TRACK))

    def test_valuation_is_at_least_k(self):
        for k in range(6):
            self.assertGreaterEqual(level_gf(k, 12, UNI).valuation(), k)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            level_gf(-1, 10)
        with self.assertRaises(ValueError):
            level_gf(5, 6)

    def test_equivalence_with_the_automaton(self):
        for k in range(7):
            forbid = level_gf(k, 25, UNI)
            track = level_gf(k, 25, BI)
            self.assertIs(track.ring, TPOLYS)
            for m in range(25):
                self.assertEqual(forbid[m], count(m, k, CountMode.FORBID), (k, m))
                self.assertEqual(track[m], count(m, k, CountMode.TRACK), (k, m))


class LayerGfTests(SimpleTestCase):
    def test_f_at_level_zero_is_one(self):
        f0 = layer_gf(Layer.F, 0, 12, UNI)
        self.assertEqual(list(f0.coeffs), [1] + [0] * 11)

    def test_layers_match_the_automaton(self):
        for layer in Layer:
            for k in range(4):
                self.assertEqual(
                    layer_gf(layer, k, 16, UNI),
                    layer_series(layer, k, 16, forbid_udr=True).evaluate_t(0),
                    (layer, k),
                )
                self.assertEqual(layer_gf(layer, k, 16, BI), layer_series(layer, k, 16), (layer, k))

    def test_layers_sum_to_the_level(self):
        for k in range(4):
            parts = [layer_gf(layer, k, 14, BI) for layer in Layer]
            self.assertEqual(parts[0] + parts[1] + parts[2] + parts[3], level_gf(k, 14, BI))


class IdentityTests(SimpleTestCase):
    def test_identity_holds(self):
        self.assertTrue(check_identity_total(20, UNI))
        self.assertTrue(check_identity_total(14, BI))

    def test_identity_fails_for_a_perturbed_root(self):
        utilde = kernel_root(22, UNI).utilde + ZSeries.monomial(5, 22)
        self.assertFalse(check_identity_total(20, UNI, utilde=utilde))

    def test_half_length_collapse(self):
        self.assertEqual(level_zero_half_length(20, UNI), solve_algebraic(A128729, 1, 20))
        self.assertEqual(level_zero_half_length(10, BI), solve_algebraic(A128728, 1, 10))
        self.assertEqual(level_zero_half_length(1, UNI).coeffs, (1,))

    def test_transformation_chain(self):
        chain = transformation_chain_residual(30)
        self.assertEqual(chain.order, 30)
        self.assertTrue(chain.is_zero())
