import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from kernel.generating_functions import level_gf
from paths.steps import udr_profile
from series.rings import TPoly

from . import golden_files
from .management.commands import verify  # noqa: F401  bind verify.CHECKS before tests patch it
from .checks import (
    CHECKS, LEVEL_LENGTH, ORACLE_LENGTH, CheckResult, check_dp_oracle, check_level_gfs, run_checks,
)
from .pipelines import ZERO, count_payload, format_payload, series_payload


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, no_color=True, **options)
    return out.getvalue(), err.getvalue()


def passing(order):
    return True, ''


def failing(order):
    return False, 'forced'


class PipelineTests(SimpleTestCase):
    def test_text_formats(self):
        self.assertEqual(format_payload(series_payload(9, True), 'text'), '1 1 2 6 20 71 262 994 3852')
        self.assertEqual(format_payload(series_payload(6), 'text'), '1 0 1 0 2 0')

    def test_tsv(self):
        self.assertEqual(format_payload(series_payload(3, True), 'tsv'), '0\t1\n1\t1\n2\t2')

    def test_json(self):
        self.assertEqual(
            format_payload(series_payload(4, True), 'json'),
            '{"sequence":["1","1","2","6"],"variable":"z(half)","t_mode":"zero"}',
        )

    def test_count_payload(self):
        payload = count_payload(10, 0)
        self.assertEqual(payload.sequence, [TPoly((71, 64, 2))])
        self.assertEqual(format_payload(payload, 'text', single=True), '71 + 64*t + 2*t^2')
        self.assertEqual(count_payload(8, 0, ZERO).sequence, [20])


class SeriesCommandTests(SimpleTestCase):
    def test_half_length(self):
        out, _ = run('series', order=9, half_length=True)
        self.assertEqual(out, '1 1 2 6 20 71 262 994 3852\n')

    def test_full_length_interleaves_zeros(self):
        out, _ = run('series', order=7)
        self.assertEqual(out, '1 0 1 0 2 0 6\n')

    def test_t_eval_one_gives_totals(self):
        out, _ = run('series', order=7, half_length=True, t_eval='one')
        self.assertEqual(out, '1 1 3 10 36 137 543\n')

    def test_matches_level_zero(self):
        series, _ = run('series', order=10, half_length=True, t_eval='zero')
        level, _ = run('levels', '0', order=10, half_length=True)
        self.assertEqual(series, level)

    def test_output_is_byte_stable(self):
        first, _ = run('series', order=12, format='json')
        second, _ = run('series', order=12, format='json')
        self.assertEqual(first, second)

    def test_bad_flags_are_usage_errors(self):
        for options in ({'order': 0}, {'t_eval': 'sometimes'}, {'order': 20000}):
            with self.assertRaises(CommandError) as ctx:
                run('series', **options)
            self.assertEqual(ctx.exception.returncode, 2, options)


class BivariateCommandTests(SimpleTestCase):
    def test_triangle_rows(self):
        out, _ = run('bivariate', order=7)
        self.assertEqual(out.splitlines(), ['1', '1', '2 1', '6 4', '20 16', '71 64 2', '262 261 20'])

    def test_t_eval(self):
        out, _ = run('bivariate', order=6, t_eval='zero')
        self.assertEqual(out, '1 1 2 6 20 71\n')


class CountCommandTests(SimpleTestCase):
    def test_track(self):
        out, _ = run('count', '10', '0')
        self.assertEqual(out, '71 + 64*t + 2*t^2\n')

    def test_t_eval(self):
        self.assertEqual(run('count', '4', '0', t_eval='one')[0], '3\n')
        self.assertEqual(run('count', '8', '0', t_eval='zero')[0], '20\n')
        self.assertEqual(run('count', '1', '0', t_eval='one')[0], '0\n')

    def test_json(self):
        out, _ = run('count', '4', '0', format='json')
        self.assertEqual(json.loads(out), {'sequence': [['2', '1']], 'variable': 'z', 't_mode': 'track'})

    def test_negative_level(self):
        with self.assertRaises(CommandError) as ctx:
            run('count', '4', '-1')
        self.assertEqual(ctx.exception.returncode, 2)


class LevelsCommandTests(SimpleTestCase):
    def test_level_one(self):
        out, _ = run('levels', '1', order=6)
        self.assertEqual(out, '0 1 0 2 0 5\n')

    def test_odd_level_at_half_length(self):
        with self.assertRaises(CommandError) as ctx:
            run('levels', '3', order=8, half_length=True)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_order_must_reach_the_level(self):
        with self.assertRaises(CommandError):
            run('levels', '3', order=4)


class VerifyCommandTests(SimpleTestCase):
    def test_selected_checks_pass(self):
        out, _ = run('verify', order=8, check=['half-length-series', 'oeis-a128729'])
        self.assertEqual(out, 'PASS 1 half-length-series\nPASS 2 oeis-a128729\n')

    def test_failure_exits_with_one(self):
        checks = (('fine', passing), ('broken', failing))
        with mock.patch('cli.checks.CHECKS', checks), \
                mock.patch('cli.management.commands.verify.CHECKS', checks):
            out = StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', stdout=out, no_color=True)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertEqual(out.getvalue(), 'PASS 1 fine\nFAIL 2 broken: forced\n')

    def test_usage_errors(self):
        for options in ({'order': 4}, {'check': ['nope']}, {'jobs': 0}):
            with self.assertRaises(CommandError) as ctx:
                run('verify', **options)
            self.assertEqual(ctx.exception.returncode, 2, options)


class CheckSuiteTests(SimpleTestCase):
    def test_names_are_unique(self):
        names = [name for name, _ in CHECKS]
        self.assertEqual(len(names), len(set(names)))

    def test_results_come_back_in_index_order(self):
        results = run_checks(16, jobs=3, names=['ode', 'recurrence', 'kernel-root', 'identity-total'])
        self.assertEqual([r.index for r in results], sorted(r.index for r in results))
        self.assertTrue(all(r.passed for r in results), [r.line() for r in results])

    def test_exceptions_become_failures(self):
        def explode(order):
            raise ZeroDivisionError('boom')

        with mock.patch('cli.checks.CHECKS', (('explode', explode),)):
            [result] = run_checks(8, jobs=1)
        self.assertFalse(result.passed)
        self.assertEqual(result.line(), 'FAIL 1 explode: ZeroDivisionError: boom')

    def test_oracle_and_level_checks_ignore_a_small_order(self):
        with mock.patch('cli.checks.udr_profile', wraps=udr_profile) as profile:
            self.assertEqual(check_dp_oracle(8), (True, ''))
        profile.assert_called_once_with(ORACLE_LENGTH)
        with mock.patch('cli.checks.level_gf', wraps=level_gf) as spy:
            self.assertEqual(check_level_gfs(8), (True, ''))
        self.assertEqual({c.args[1] for c in spy.call_args_list}, {LEVEL_LENGTH + 1})

    def test_line(self):
        self.assertEqual(CheckResult(3, 'ode', True).line(), 'PASS 3 ode')
        self.assertEqual(CheckResult(3, 'ode', True, 'ignored').line(), 'PASS 3 ode')


class AsymptCommandTests(SimpleTestCase):
    def test_tsv(self):
        out, _ = run('asympt', '--n', '50', '100', '--format', 'tsv')
        lines = out.splitlines()
        self.assertEqual(lines[0], 'n\tcoefficient\testimate\tratio')
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith('50\t'))

    def test_json(self):
        out, _ = run('asympt', '--n', '9', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(set(data), {'constants', 'rows'})
        self.assertEqual(data['rows'][0]['coefficient'], '15183')
        self.assertTrue(data['constants']['z0'].startswith('0.21748199'))

    def test_text_columns_line_up(self):
        out, _ = run('asympt', '--n', '50', '1600')
        lines = out.splitlines()
        self.assertEqual(len({len(line) for line in lines}), 1)

    def test_bad_n(self):
        with self.assertRaises(CommandError) as ctx:
            run('asympt', '--n', '0')
        self.assertEqual(ctx.exception.returncode, 2)


class RenderCommandTests(SimpleTestCase):
    def test_stdout(self):
        out, _ = run('render', 'UUDRDD')
        self.assertTrue(out.startswith('<?xml'))
        self.assertTrue(out.endswith('</svg>\n'))

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'path.svg'
            out, err = run('render', 'UUDR', output=str(target), unit_px=5)
            self.assertEqual(out, '')
            self.assertIn('Wrote', err)
            self.assertIn('step-R', target.read_text(encoding='utf-8'))

    def test_invalid_word(self):
        with self.assertRaises(CommandError) as ctx:
            run('render', 'UR')
        self.assertEqual(ctx.exception.returncode, 2)


class GoldenFileTests(SimpleTestCase):
    def test_available(self):
        self.assertEqual(golden_files.available(), [
            'a128728', 'a128729', 'half_length_series', 'kernel_root',
            'level0_bivariate', 'level0_univariate',
        ])

    def test_avoidance_terms(self):
        golden = golden_files.load('a128729')
        self.assertEqual(golden.order, 20)
        self.assertTrue(golden.provenance)
        self.assertEqual(golden.as_series()[19], 22938095326)

    def test_sparse_files_fill_zeros(self):
        golden = golden_files.load('kernel_root')
        self.assertEqual(golden.as_series()[1], 0)
        self.assertEqual(golden.as_series()[2], -1)

    def test_triangle_rows(self):
        golden = golden_files.load('a128728')
        self.assertEqual(golden.values()[6], TPoly((262, 261, 20)))
        self.assertEqual(golden.order, 9)
        self.assertEqual(sum(len(row.coeffs) for row in golden.values()), 21)

    def test_triangle_matches_brute_force(self):
        golden = golden_files.load('a128728')
        profile = udr_profile(2 * (golden.order - 1))
        for n, row in enumerate(golden.values()):
            self.assertEqual(profile.get((2 * n, 0), TPoly()), row, n)


class ApiTests(APISimpleTestCase):
    def test_series(self):
        response = self.client.get('/api/series/', {'order': 9, 'half_length': 'true'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()['sequence'], ['1', '1', '2', '6', '20', '71', '262', '994', '3852'])

    def test_same_bytes_as_the_command(self):
        response = self.client.get('/api/series/', {'order': 12})
        out, _ = run('series', order=12, format='json')
        self.assertEqual(response.content.decode('utf-8'), out.rstrip('\n'))

    def test_count(self):
        response = self.client.get('/api/count/', {'length': 10, 'level': 0})
        self.assertEqual(response.json(), {'sequence': [['71', '64', '2']], 'variable': 'z', 't_mode': 'track'})

    def test_bivariate(self):
        response = self.client.get('/api/bivariate/', {'order': 3})
        self.assertEqual(response.json()['sequence'], [['1'], ['1'], ['2', '1']])

    def test_levels(self):
        response = self.client.get('/api/levels/0/', {'order': 5, 'half_length': 'true'})
        self.assertEqual(response.json()['sequence'], ['1', '1', '2', '6', '20'])
        self.assertEqual(response.json()['variable'], 'z(half)')

    def test_bad_queries(self):
        for url, params in (
            ('/api/levels/1/', {'order': 5, 'half_length': 'true'}),
            ('/api/count/', {'length': -1, 'level': 0}),
            ('/api/series/', {'t_eval': 'sometimes'}),
            ('/api/asympt/', {'n': 0}),
            ('/api/paths/render/', {'word': 'UR'}),
            ('/api/paths/validate/', {'word': 'UXD'}),
        ):
            response = self.client.get(url, params)
            self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST, url)

    def test_validate(self):
        response = self.client.get('/api/paths/validate/', {'word': 'UR'})
        self.assertEqual(response.json(), {
            'word': 'UR', 'valid': False, 'violation': {'index': 0, 'rule': 'UpRed'}, 'udr_count': None,
        })
        response = self.client.get('/api/paths/validate/', {'word': 'UUDR'})
        self.assertEqual(response.json()['udr_count'], 1)

    def test_render(self):
        response = self.client.get('/api/paths/render/', {'word': 'UUDR'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response['Content-Type'], 'image/svg+xml')
        self.assertIn(b'step-R', response.content)

    def test_asympt(self):
        response = self.client.get('/api/asympt/', {'n': [50, 100]})
        self.assertEqual([row['n'] for row in response.json()['rows']], [50, 100])
