import itertools
import xml.etree.ElementTree as ET

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from series.rings import TPoly

from .steps import (
    STEP_ORDER, CapExceeded, Rule, SkewPath, Step, count_udr, enumerate_paths,
    format_word, parse_word, udr_histogram, udr_profile, validate,
)
from .svg import SVG_NS, RenderOptions, render_svg

U, D, R = Step.UP, Step.DOWN_BLACK, Step.DOWN_RED


def rules_hold(text):
    """Direct check on the letter form, independent of validate()"""
    if 'UR' in text or 'RU' in text:
        return False
    level = 0
    for char in text:
        level += 1 if char == 'U' else -1
        if level < 0:
            return False
    return True


class StepTests(SimpleTestCase):
    def test_displacements(self):
        self.assertEqual([s.displacement for s in STEP_ORDER], [1, -1, -1])

    def test_parse_and_format(self):
        self.assertEqual(parse_word('uu d r'), [U, U, D, R])
        self.assertEqual(format_word([U, D, R]), 'UDR')
        with self.assertRaisesMessage(ValueError, 'position 2'):
            parse_word('UUX')


class ValidateTests(SimpleTestCase):
    def test_empty_word_is_valid(self):
        self.assertTrue(validate([]).valid)
        self.assertIsNone(validate([]).violation)

    def test_up_red(self):
        report = validate([U, R])
        self.assertFalse(report.valid)
        self.assertEqual(report.violation.rule, Rule.UP_RED)
        self.assertEqual(report.violation.index, 0)

    def test_red_up(self):
        report = validate([U, U, D, R, U])
        self.assertEqual(report.violation.rule, Rule.RED_UP)
        self.assertEqual(report.violation.index, 3)

    def test_below_axis(self):
        report = validate([D])
        self.assertEqual(report.violation.rule, Rule.BELOW_AXIS)
        self.assertEqual(report.violation.index, 0)

    def test_valid_path_ending_on_the_axis(self):
        self.assertTrue(validate([U, U, D, R]).valid)
        self.assertEqual(SkewPath.from_steps('UUDR').end_level, 0)
        self.assertEqual(SkewPath.from_steps('UUDR').height, 2)
        self.assertEqual(SkewPath.from_steps('').height, 0)

    def test_from_steps_rejects_invalid_words(self):
        with self.assertRaisesMessage(ValueError, 'UpRed'):
            SkewPath.from_steps('UR')

    def test_exhaustive_against_direct_check(self):
        for m in range(13):
            valid = 0
            for word in itertools.product(STEP_ORDER, repeat=m):
                ok = validate(word).valid
                self.assertEqual(ok, rules_hold(format_word(word)), format_word(word))
                valid += ok
            self.assertEqual(sum(1 for _ in enumerate_paths(m)), valid, f'length {m}')


class CountUdrTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(count_udr(SkewPath.from_steps('UD')), 0)
        self.assertEqual(count_udr(SkewPath.from_steps('UUDR')), 1)
        self.assertEqual(count_udr(SkewPath.from_steps('UUDD')), 0)
        self.assertEqual(count_udr([U, U, D, R, D, U, U, D, R, R]), 2)

    @settings(deadline=None)
    @given(st.integers(min_value=0, max_value=10), st.data())
    def test_reverse_scan_gives_the_same_count(self, length, data):
        paths = list(enumerate_paths(length))
        path = data.draw(st.sampled_from(paths))
        backwards = path.steps[::-1]
        mirrored = sum(
            1 for i in range(len(backwards) - 2)
            if backwards[i:i + 3] == (R, D, U)
        )
        self.assertEqual(count_udr(path), mirrored)


class EnumerateTests(SimpleTestCase):
    def test_empty_path(self):
        paths = list(enumerate_paths(0))
        self.assertEqual(len(paths), 1)
        self.assertEqual(paths[0].steps, ())

    def test_length_four(self):
        self.assertEqual(len(list(enumerate_paths(4))), 7)

    def test_avoiding_paths_on_the_axis(self):
        self.assertEqual(
            [str(p) for p in enumerate_paths(4, end_level=0, forbid_udr=True)],
            ['UUDD', 'UDUD'],
        )
        self.assertEqual(len(list(enumerate_paths(6, end_level=0, forbid_udr=True))), 6)

    def test_lexicographic_order(self):
        words = [str(p) for p in enumerate_paths(6)]
        self.assertEqual(words, sorted(words, key=lambda w: ['UDR'.index(c) for c in w]))

    def test_unreachable_level_yields_nothing(self):
        self.assertEqual(list(enumerate_paths(4, end_level=7)), [])
        self.assertEqual(list(enumerate_paths(4, end_level=1)), [])

    def test_yielded_paths_satisfy_the_invariants(self):
        for path in enumerate_paths(8):
            self.assertTrue(validate(path.steps).valid)
            self.assertEqual(path.levels[0], 0)
            self.assertEqual(len(path.levels), path.length + 1)
            self.assertTrue(all(level >= 0 for level in path.levels))
            self.assertEqual(path.udr_count, count_udr(path.steps))

    @override_settings(SKEW_ORACLE_CAP=6)
    def test_cap(self):
        with self.assertRaises(CapExceeded):
            next(enumerate_paths(7))
        with self.assertRaises(CapExceeded):
            udr_profile(7)

    def test_histograms(self):
        self.assertEqual(udr_histogram(4, 0), TPoly((2, 1)))
        self.assertEqual(udr_histogram(10, 0), TPoly((71, 64, 2)))
        self.assertEqual(udr_histogram(3, 0), TPoly())

    def test_profile_matches_histograms(self):
        profile = udr_profile(9)
        for m in range(10):
            for k in range(m + 1):
                self.assertEqual(profile.get((m, k), TPoly()), udr_histogram(m, k), (m, k))


class SvgTests(SimpleTestCase):
    def lines(self, svg):
        root = ET.fromstring(svg.encode('utf-8'))
        return root, root.findall(f'.//{{{SVG_NS}}}line')

    def test_empty_path_has_a_canvas(self):
        root, lines = self.lines(render_svg(SkewPath.from_steps('')))
        self.assertEqual(lines, [])
        self.assertGreater(int(root.get('width')), 0)
        self.assertGreater(int(root.get('height')), 0)

    def test_up_down(self):
        _, lines = self.lines(render_svg(SkewPath.from_steps('UD')))
        self.assertEqual(len(lines), 2)
        self.assertEqual(lines[1].get('stroke'), '#000000')
        self.assertGreater(int(lines[1].get('y2')), int(lines[1].get('y1')))

    def test_red_step(self):
        _, lines = self.lines(render_svg(SkewPath.from_steps('UUDR')))
        self.assertEqual([line.get('stroke') for line in lines], ['#000000'] * 3 + ['#d62728'])
        self.assertEqual(lines[3].get('class'), 'step-R')

    def test_output_is_deterministic(self):
        path = SkewPath.from_steps('UUDRDD')
        self.assertEqual(render_svg(path), render_svg(path))

    def test_options(self):
        options = RenderOptions(unit_px=10, red_color='red')
        root, lines = self.lines(render_svg(SkewPath.from_steps('UUDR'), options))
        self.assertEqual(root.get('width'), str(10 * 2 + 10 * 4))
        self.assertEqual(lines[3].get('stroke'), 'red')
        with self.assertRaises(ValueError):
            RenderOptions(unit_px=0)

    @override_settings(SKEW_SVG_UNIT_PX=7)
    def test_options_from_settings(self):
        self.assertEqual(RenderOptions.from_settings().unit_px, 7)
        self.assertEqual(RenderOptions.from_settings(unit_px=3).unit_px, 3)
