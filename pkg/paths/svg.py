"""
Static SVG drawing of a skew Dyck path in the red down-step encoding.
"""
from dataclasses import dataclass

from django.conf import settings
from django.utils.html import escape

from .steps import Step, format_word

SVG_NS = 'http://www.w3.org/2000/svg'


@dataclass(frozen=True)
class RenderOptions:
    """Canvas layout; every coordinate is a whole multiple of unit_px"""
    unit_px: int = 20
    red_color: str = '#d62728'
    black_color: str = '#000000'
    stroke_width: int = 2

    @classmethod
    def from_settings(cls, **overrides):
        values = {
            'unit_px': getattr(settings, 'SKEW_SVG_UNIT_PX', cls.unit_px),
            'red_color': getattr(settings, 'SKEW_SVG_RED_COLOR', cls.red_color),
            'black_color': getattr(settings, 'SKEW_SVG_BLACK_COLOR', cls.black_color),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def __post_init__(self):
        if self.unit_px <= 0:
            raise ValueError('unit_px must be positive')

    def color(self, step):
        return self.red_color if step is Step.DOWN_RED else self.black_color


def render_svg(path, options=None):
    """One <line> per step; DownRed stroked red, Up and DownBlack black"""
    options = options or RenderOptions.from_settings()
    unit = options.unit_px
    margin = unit
    height_levels = path.height
    width = 2 * margin + unit * path.length
    height = 2 * margin + unit * height_levels

    def y(level):
        return margin + unit * (height_levels - level)

    lines = []
    for index, step in enumerate(path.steps):
        x1 = margin + unit * index
        lines.append(
            f'    <line class="step-{step.value}" x1="{x1}" y1="{y(path.levels[index])}" '
            f'x2="{x1 + unit}" y2="{y(path.levels[index + 1])}" '
            f'stroke="{options.color(step)}" stroke-width="{options.stroke_width}" '
            f'stroke-linecap="round"/>'
        )

    body = ''.join(f'{line}\n' for line in lines)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="{SVG_NS}" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'  <title>{escape(format_word(path.steps)) or "empty path"}</title>\n'
        f'  <g id="steps" fill="none">\n'
        f'{body}'
        '  </g>\n'
        '</svg>\n'
    )
