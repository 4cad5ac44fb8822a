from dataclasses import dataclass

from django.conf import settings
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .rings import TPoly, exact_str, parse_exact


@dataclass(frozen=True)
class TEval:
    """How the marker t is treated: kept symbolic (track) or set to a rational"""
    label: str
    value: object = None

    @property
    def is_track(self):
        return self.value is None

    @property
    def is_zero(self):
        return self.value == 0

    def apply(self, coefficient):
        """Specialise one coefficient (TPoly or rational)"""
        if self.is_track or not isinstance(coefficient, TPoly):
            return coefficient
        return coefficient.evaluate(self.value)

    def __str__(self):
        return self.label


def parse_t_eval(text):
    """'track', 'zero', 'one' or an exact rational such as '3' or '1/2'"""
    text = str(text).strip().lower()
    if text == 'track':
        return TEval('track')
    if text == 'zero':
        return TEval('zero', 0)
    if text == 'one':
        return TEval('one', 1)
    try:
        value = parse_exact(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ValueError(f'--t-eval expects track, zero, one or a rational, got {text!r}')
    return TEval(exact_str(value), value)


def format_number(value):
    """Exact JSON value: decimal string, or array of strings for a TPoly"""
    if isinstance(value, TPoly):
        return value.to_json()
    return exact_str(value)


def format_text(value):
    return str(value) if isinstance(value, TPoly) else exact_str(value)


class OrderField(serializers.IntegerField):
    def __init__(self, **kwargs):
        kwargs.setdefault('min_value', 1)
        kwargs.setdefault('required', False)
        super().__init__(**kwargs)


class TEvalField(serializers.CharField):
    def to_internal_value(self, data):
        try:
            return parse_t_eval(super().to_internal_value(data))
        except ValueError as e:
            raise serializers.ValidationError(str(e))


class SeriesQuerySerializer(serializers.Serializer):
    """Flags shared by the series, bivariate and levels pipelines"""
    order = OrderField()
    half_length = serializers.BooleanField(required=False, default=False)
    t_eval = TEvalField(required=False)

    def validate_order(self, value):
        if value > 10000:
            raise serializers.ValidationError('order is limited to 10000.')
        return value

    def validate(self, attrs):
        attrs.setdefault('order', getattr(settings, 'SKEW_DEFAULT_ORDER', 16))
        return attrs


class LevelsQuerySerializer(SeriesQuerySerializer):
    k = serializers.IntegerField(min_value=0)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs.get('half_length') and attrs['k'] % 2:
            raise serializers.ValidationError(
                {'half_length': 'half-length output needs an even level k.'}
            )
        full_order = 2 * attrs['order'] if attrs.get('half_length') else attrs['order']
        if full_order < attrs['k'] + 2:
            raise serializers.ValidationError(
                {'order': f'order must cover z^(k+1), k + 2 = {attrs["k"] + 2} terms.'}
            )
        return attrs


class CountQuerySerializer(serializers.Serializer):
    length = serializers.IntegerField(min_value=0)
    level = serializers.IntegerField(min_value=0)
    t_eval = TEvalField(required=False)


class SeriesPayloadSerializer(serializers.Serializer):
    """{"sequence": [...], "variable": "z" | "z(half)", "t_mode": ...}"""
    sequence = serializers.SerializerMethodField()
    variable = serializers.ChoiceField(choices=['z', 'z(half)'])
    t_mode = serializers.CharField()

    def get_sequence(self, obj):
        return [format_number(c) for c in obj.sequence]


@dataclass(frozen=True)
class SeriesPayload:
    sequence: list
    variable: str
    t_mode: str

    def data(self):
        return SeriesPayloadSerializer(self).data


def render_json(data):
    """Byte-stable JSON for stdout and the HTTP API"""
    return JSONRenderer().render(data)

