"""
Management command: exact coefficients against the singularity-analysis estimate
"""
from django.core.management.base import BaseCommand

from asymptotics.estimates import DEFAULT_N_VALUES, constants, convergence_report
from asymptotics.serializers import AsymptQuerySerializer, ConstantsSerializer, ConvergenceRowSerializer
from cli.management.base import usage_error
from cli.pipelines import FORMATS
from series.serializers import render_json

COLUMNS = ('n', 'coefficient', 'estimate', 'ratio')


class Command(BaseCommand):
    help = 'Convergence report of s_n / estimate(n) for the avoidance series'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, nargs='+', dest='n_values',
                            help=f'Values of n (default {" ".join(map(str, DEFAULT_N_VALUES))})')
        parser.add_argument('--format', choices=FORMATS, default='text')

    def handle(self, *args, **options):
        serializer = AsymptQuerySerializer(data={'n': options['n_values'] or list(DEFAULT_N_VALUES)})
        if not serializer.is_valid():
            raise usage_error('; '.join(f'{k}: {v}' for k, v in serializer.errors.items()))

        rows = ConvergenceRowSerializer(convergence_report(serializer.validated_data['n']), many=True).data
        fmt = options['format']
        if fmt == 'json':
            data = {'constants': ConstantsSerializer(constants()).data, 'rows': rows}
            self.stdout.write(render_json(data).decode('utf-8'))
            return

        table = [[str(row[c]) for c in COLUMNS] for row in rows]
        if fmt == 'tsv':
            for line in [list(COLUMNS)] + table:
                self.stdout.write('\t'.join(line))
            return
        widths = [max(len(c), *(len(r[i]) for r in table)) if table else len(c) for i, c in enumerate(COLUMNS)]
        self.stdout.write('  '.join(c.rjust(w) for c, w in zip(COLUMNS, widths)))
        for line in table:
            self.stdout.write('  '.join(v.rjust(w) for v, w in zip(line, widths)))
