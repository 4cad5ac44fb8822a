from rest_framework import serializers

from .steps import SkewPath, format_word, parse_word, validate


class WordSerializer(serializers.Serializer):
    word = serializers.CharField(allow_blank=True, trim_whitespace=True)
    unit_px = serializers.IntegerField(min_value=1, required=False)

    def validate_word(self, value):
        try:
            return parse_word(value)
        except ValueError as e:
            raise serializers.ValidationError(str(e))


class ValidityReportSerializer(serializers.Serializer):
    word = serializers.CharField()
    valid = serializers.BooleanField()
    violation = serializers.SerializerMethodField()
    udr_count = serializers.SerializerMethodField()

    def get_violation(self, obj):
        if obj['report'].violation is None:
            return None
        v = obj['report'].violation
        return {'index': v.index, 'rule': v.rule.value}

    def get_udr_count(self, obj):
        if not obj['report'].valid:
            return None
        return SkewPath.from_steps(obj['steps']).udr_count


def report_data(steps):
    report = validate(steps)
    return ValidityReportSerializer({
        'word': format_word(steps),
        'valid': report.valid,
        'report': report,
        'steps': steps,
    }).data
