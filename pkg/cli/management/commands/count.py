"""
Management command: number of paths with m steps ending at level k
"""
from cli.management.base import EnumerationCommand
from cli.pipelines import count_payload
from series.serializers import CountQuerySerializer


class Command(EnumerationCommand):
    help = 'Count skew Dyck paths of length m ending at level k (a TPoly in t unless --t-eval is set)'
    uses_order = False

    def add_arguments(self, parser):
        parser.add_argument('m', type=int, help='Number of steps')
        parser.add_argument('k', type=int, help='End level')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        attrs = self.validated(CountQuerySerializer(
            data=self.query(options, length=options['m'], level=options['k'])
        ))
        payload = count_payload(attrs['length'], attrs['level'], self.t_eval(attrs))
        self.emit(payload, options, single=True)
