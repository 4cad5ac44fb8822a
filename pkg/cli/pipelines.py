"""
The computations behind every command and API endpoint, returning payloads
that format identically on stdout and over HTTP.
"""
import logging

from automaton.layers import CountMode, count
from kernel.generating_functions import KernelMode, level_gf
from series.algebraic import solve_algebraic
from series.equations import avoidance_equation
from series.rings import TPoly
from series.serializers import SeriesPayload, format_text, parse_t_eval, render_json

logger = logging.getLogger(__name__)

FORMATS = ('json', 'text', 'tsv')
TAB = '\t'

TRACK = parse_t_eval('track')
ZERO = parse_t_eval('zero')


def count_payload(length, level, t_eval=TRACK):
    """Number of paths of one length ending at one level"""
    if t_eval.is_track:
        value = count(length, level, CountMode.TRACK)
    elif t_eval.is_zero:
        value = count(length, level, CountMode.FORBID)
    else:
        value = count(length, level, CountMode.TRACK).evaluate(t_eval.value)
    return SeriesPayload([value], 'z', str(t_eval))


def _half_length_series(order, t_eval):
    if t_eval.is_zero:
        return solve_algebraic(avoidance_equation(False), 1, order)
    s = solve_algebraic(avoidance_equation(True), 1, order)
    return s if t_eval.is_track else s.evaluate_t(t_eval.value)


def series_payload(order, half_length=False, t_eval=ZERO):
    """Level-0 series from the avoidance cubic, at half length or spread over z^2"""
    if half_length:
        sequence = list(_half_length_series(order, t_eval).coeffs)
    else:
        half = _half_length_series((order + 1) // 2, t_eval)
        zero = half.ring.zero()
        sequence = [half[m // 2] if m % 2 == 0 else zero for m in range(order)]
    return SeriesPayload(sequence, 'z(half)' if half_length else 'z', str(t_eval))


def bivariate_payload(order, t_eval=TRACK):
    """Triangle rows: coefficients of t^j for each half-length n"""
    return SeriesPayload(list(_half_length_series(order, t_eval).coeffs), 'z(half)', str(t_eval))


def levels_payload(k, order, half_length=False, t_eval=ZERO):
    """Paths ending at level k from the kernel-method closed form"""
    mode = KernelMode.UNIVARIATE if t_eval.is_zero else KernelMode.BIVARIATE
    full_order = 2 * order if half_length else order
    logger.debug(f'levels k={k} order={full_order} mode={mode.value}')
    s = level_gf(k, full_order, mode)
    if mode is KernelMode.BIVARIATE and not t_eval.is_track:
        s = s.evaluate_t(t_eval.value)
    if half_length:
        s = s.compress(2)
    return SeriesPayload(list(s.coeffs), 'z(half)' if half_length else 'z', str(t_eval))


def _row(value, sep):
    if isinstance(value, TPoly):
        return sep.join(value.to_json())
    return format_text(value)


def format_payload(payload, fmt='json', single=False):
    """
    json: the payload schema; text: one line of coefficients, or one line per
    coefficient when they are polynomials in t; tsv: index, value columns.
    ``single`` prints a lone count as a bare value.
    """
    if fmt == 'json':
        return render_json(payload.data()).decode('utf-8')
    sequence = payload.sequence
    if fmt == 'tsv':
        return '\n'.join(f'{n}\t{_row(c, TAB)}' for n, c in enumerate(sequence))
    if single:
        return format_text(sequence[0])
    if any(isinstance(c, TPoly) for c in sequence):
        return '\n'.join(_row(c, ' ') for c in sequence)
    return ' '.join(format_text(c) for c in sequence)
