from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from paths.steps import Step, udr_profile
from series.rings import TPOLYS, TPoly

from .layers import (
    TRANSITIONS, CountMode, Layer, StateVector, count, count_all,
    count_forbidden_edge, layer_series, level_series, run, step,
)


class TransitionTests(SimpleTestCase):
    def test_forbidden_factors_have_no_edges(self):
        for tr in TRANSITIONS:
            self.assertFalse(tr.source is Layer.K and tr.step is Step.UP)
            self.assertFalse(tr.source is Layer.F and tr.step is Step.DOWN_RED)

    def test_only_the_g_to_k_red_edge_is_marked(self):
        marked = [tr for tr in TRANSITIONS if tr.marked]
        self.assertEqual(len(marked), 1)
        self.assertEqual((marked[0].source, marked[0].target), (Layer.G, Layer.K))

    def test_up_moves_from_h_land_in_f(self):
        targets = {tr.target for tr in TRANSITIONS if tr.source is Layer.H and tr.step is Step.UP}
        self.assertEqual(targets, {Layer.F})


class StepTests(SimpleTestCase):
    def test_first_step(self):
        self.assertEqual(step(StateVector.initial()), StateVector({(Layer.F, 1): TPoly((1,))}))

    def test_four_steps(self):
        state = run(4)[4]
        self.assertEqual(state.total(), TPoly((6, 1)))
        self.assertEqual(state.total().total(), 7)
        self.assertEqual(state.at_level(0), TPoly((2, 1)))

    def test_negative_level_is_rejected(self):
        with self.assertRaises(ValueError):
            step(StateVector({(Layer.H, -1): TPoly((1,))}))

    def test_run_returns_every_prefix(self):
        states = run(3)
        self.assertEqual(len(states), 4)
        self.assertEqual(states[0], StateVector.initial())


class CountTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(count(8, 0, CountMode.FORBID), 20)
        self.assertEqual(count(10, 0, CountMode.TRACK), TPoly((71, 64, 2)))
        self.assertEqual(count(12, 0, CountMode.TOTAL), 543)
        self.assertEqual(count(1, 0, CountMode.TOTAL), 0)

    def test_mode_accepts_strings(self):
        self.assertEqual(count(4, 0, 'total'), 3)

    def test_parity_and_range(self):
        for m in range(10):
            for k in range(12):
                if (m - k) % 2 or k > m:
                    self.assertEqual(count(m, k, CountMode.TRACK), TPoly())

    def test_count_all(self):
        self.assertEqual(count_all(4, CountMode.TOTAL), 7)
        self.assertEqual(count_all(0), TPoly((1,)))

    def test_oracle_equivalence(self):
        profile = udr_profile(20)
        for m in range(21):
            for k in range(m + 1):
                self.assertEqual(count(m, k), profile.get((m, k), TPoly()), (m, k))

    def test_marker_degree_is_at_most_a_third_of_the_length(self):
        for m, state in enumerate(run(39)):
            for (layer, level), weight in state.weights.items():
                self.assertLessEqual(weight.degree, m // 3, (m, layer, level))
                self.assertTrue(weight.is_integral())
                self.assertTrue(all(c >= 0 for c in weight.coeffs))

    def test_deleted_edge_matches_forbid_mode(self):
        for m in range(16):
            for k in range(m + 1):
                self.assertEqual(count_forbidden_edge(m, k), count(m, k, CountMode.FORBID))

    @settings(deadline=None)
    @given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30))
    def test_total_is_track_at_one(self, m, k):
        self.assertEqual(count(m, k, CountMode.TOTAL), count(m, k).evaluate(1))


class LayerSeriesTests(SimpleTestCase):
    def test_f_at_level_zero(self):
        self.assertEqual(layer_series(Layer.F, 0, 10).coeffs, (TPoly((1,)),) + (TPoly(),) * 9)

    def test_g_at_level_zero(self):
        g0 = layer_series(Layer.G, 0, 7).evaluate_t(0)
        self.assertEqual(list(g0.coeffs), [0, 0, 1, 0, 1, 0, 2])

    def test_k_at_level_zero(self):
        k0 = layer_series(Layer.K, 0, 6).evaluate_t(1)
        self.assertEqual(k0[4], 1)

    def test_level_series_sums_the_layers(self):
        total = level_series(2, 12)
        parts = [layer_series(layer, 2, 12) for layer in Layer]
        self.assertEqual(total, parts[0] + parts[1] + parts[2] + parts[3])
        self.assertIs(total.ring, TPOLYS)

    def test_recursion_identities(self):
        order, levels = 16, 6
        f = {n: layer_series(Layer.F, n, order) for n in range(levels + 2)}
        g = {n: layer_series(Layer.G, n, order) for n in range(levels + 2)}
        h = {n: layer_series(Layer.H, n, order) for n in range(levels + 2)}
        k = {n: layer_series(Layer.K, n, order) for n in range(levels + 2)}
        t = TPoly((0, 1))
        for n in range(levels):
            for m in range(order - 1):
                self.assertEqual(f[n + 1][m + 1], f[n][m] + g[n][m] + h[n][m])
                self.assertEqual(g[n][m + 1], f[n + 1][m])
                self.assertEqual(h[n][m + 1], g[n + 1][m] + h[n + 1][m] + k[n + 1][m])
                self.assertEqual(k[n][m + 1], t * g[n + 1][m] + h[n + 1][m] + k[n + 1][m])
