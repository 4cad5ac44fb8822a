"""
Management command to run the invariant suite.
Prints one PASS/FAIL line per check in index order; exits 1 if any check fails.
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.checks import CHECKS, run_checks
from cli.management.base import CHECK_FAILED, usage_error


class Command(BaseCommand):
    help = 'Cross-check brute force, automaton, kernel method, recurrence, ODE and golden files'

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, default=None,
                            help='Series order for the checks (default SKEW_DEFAULT_ORDER)')
        parser.add_argument('--jobs', type=int, default=None,
                            help='Worker threads (default SKEW_VERIFY_JOBS)')
        parser.add_argument('--check', action='append', dest='checks', default=None,
                            help='Run only the named check (repeatable)')

    def handle(self, *args, **options):
        order = options['order'] or getattr(settings, 'SKEW_DEFAULT_ORDER', 16)
        if order < 8:
            raise usage_error('--order must be at least 8')
        if options['jobs'] is not None and options['jobs'] < 1:
            raise usage_error('--jobs must be at least 1')
        known = {name for name, _ in CHECKS}
        unknown = sorted(set(options['checks'] or ()) - known)
        if unknown:
            raise usage_error(f'unknown check(s): {", ".join(unknown)}')

        results = run_checks(order, jobs=options['jobs'], names=options['checks'])
        for result in results:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            self.stdout.write(style(result.line()))

        failed = [r for r in results if not r.passed]
        if failed:
            raise CommandError(f'{len(failed)} of {len(results)} checks failed', returncode=CHECK_FAILED)
