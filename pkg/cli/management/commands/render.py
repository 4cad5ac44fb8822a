"""
Management command: draw a path as SVG, DownRed steps in red
"""
from pathlib import Path

from django.core.management.base import BaseCommand

from cli.management.base import usage_error
from paths.steps import SkewPath
from paths.svg import RenderOptions, render_svg


class Command(BaseCommand):
    help = 'Render a step word such as UUDRDD as an SVG image'

    def add_arguments(self, parser):
        parser.add_argument('word', help='Steps as letters: U (up), D (down), R (red down)')
        parser.add_argument('--output', '-o', help='Write to this file instead of stdout')
        parser.add_argument('--unit-px', type=int, default=None, help='Grid unit in pixels')

    def handle(self, *args, **options):
        try:
            path = SkewPath.from_steps(options['word'])
            svg = render_svg(path, RenderOptions.from_settings(unit_px=options['unit_px']))
        except ValueError as e:
            raise usage_error(str(e))

        if options['output']:
            Path(options['output']).write_text(svg, encoding='utf-8')
            self.stderr.write(self.style.SUCCESS(f'Wrote {options["output"]}'))
        else:
            self.stdout.write(svg, ending='')
