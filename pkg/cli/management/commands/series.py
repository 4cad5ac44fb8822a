"""
Management command: the level-0 series from the avoidance cubic
"""
from cli.management.base import EnumerationCommand
from cli.pipelines import series_payload
from series.serializers import SeriesQuerySerializer


class Command(EnumerationCommand):
    help = 'Print the level-0 series (paths avoiding up-down-red unless --t-eval says otherwise)'
    default_t_eval = 'zero'
    uses_half_length = True

    def handle(self, *args, **options):
        attrs = self.validated(SeriesQuerySerializer(data=self.query(options)))
        payload = series_payload(attrs['order'], attrs['half_length'], self.t_eval(attrs))
        self.emit(payload, options)
