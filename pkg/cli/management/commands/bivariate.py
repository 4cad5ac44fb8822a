"""
Management command: triangle of paths by half-length and up-down-red count
"""
from cli.management.base import EnumerationCommand
from cli.pipelines import bivariate_payload
from series.serializers import SeriesQuerySerializer


class Command(EnumerationCommand):
    help = 'Print one row per half-length n: the coefficients of t^0, t^1, ...'

    def handle(self, *args, **options):
        attrs = self.validated(SeriesQuerySerializer(data=self.query(options)))
        self.emit(bivariate_payload(attrs['order'], self.t_eval(attrs)), options)
