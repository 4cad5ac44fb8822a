"""
Shared flags for the enumeration commands.

Flags are checked by the same DRF serializers the HTTP API uses, before any
computation starts; a rejected flag ends the command with exit code 2.
"""
from django.core.management.base import BaseCommand, CommandError

from cli.pipelines import FORMATS, format_payload
from series.serializers import parse_t_eval

USAGE_ERROR = 2
CHECK_FAILED = 1


def usage_error(message):
    return CommandError(message, returncode=USAGE_ERROR)


class EnumerationCommand(BaseCommand):
    default_t_eval = 'track'
    uses_order = True
    uses_half_length = False

    def add_arguments(self, parser):
        if self.uses_order:
            parser.add_argument('--order', type=int, help='Number of coefficients (default SKEW_DEFAULT_ORDER)')
        if self.uses_half_length:
            parser.add_argument('--half-length', action='store_true',
                                help='Index by step pairs (z^2 -> z)')
        parser.add_argument('--t-eval', default=self.default_t_eval,
                            help='track, zero, one or a rational value for t '
                                 f'(default {self.default_t_eval})')
        parser.add_argument('--format', choices=FORMATS, default='text')

    def validated(self, serializer):
        """Run a query serializer over the flags, raising a usage error on failure"""
        if not serializer.is_valid():
            problems = '; '.join(
                f'{field}: {" ".join(str(m) for m in messages)}'
                for field, messages in serializer.errors.items()
            )
            raise usage_error(problems)
        return serializer.validated_data

    def query(self, options, **extra):
        data = {'t_eval': options['t_eval'], **extra}
        if self.uses_order and options.get('order') is not None:
            data['order'] = options['order']
        if self.uses_half_length:
            data['half_length'] = options['half_length']
        return data

    def t_eval(self, attrs):
        return attrs.get('t_eval') or parse_t_eval(self.default_t_eval)

    def emit(self, payload, options, single=False):
        self.stdout.write(format_payload(payload, options['format'], single=single))
