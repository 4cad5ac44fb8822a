"""
Management command: paths ending at level k from the kernel-method formula
"""
from cli.management.base import EnumerationCommand
from cli.pipelines import levels_payload
from series.serializers import LevelsQuerySerializer


class Command(EnumerationCommand):
    help = 'Print the series of paths ending at level k'
    default_t_eval = 'zero'
    uses_half_length = True

    def add_arguments(self, parser):
        parser.add_argument('k', type=int, help='End level')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        attrs = self.validated(LevelsQuerySerializer(data=self.query(options, k=options['k'])))
        payload = levels_payload(attrs['k'], attrs['order'], attrs['half_length'], self.t_eval(attrs))
        self.emit(payload, options)
