import mpmath as mp
from rest_framework import serializers


def float_text(value, digits=15):
    # nstr keeps exponents that float() would overflow
    return mp.nstr(value, digits)


class AsymptQuerySerializer(serializers.Serializer):
    n = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)

    def validate_n(self, value):
        if len(value) > 64:
            raise serializers.ValidationError('at most 64 values of n.')
        if value and max(value) > 20000:
            raise serializers.ValidationError('n is limited to 20000.')
        return value


class ConvergenceRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    coefficient = serializers.SerializerMethodField()
    estimate = serializers.SerializerMethodField()
    ratio = serializers.SerializerMethodField()

    def get_coefficient(self, obj):
        return str(obj.coefficient)

    def get_estimate(self, obj):
        return float_text(obj.estimate)

    def get_ratio(self, obj):
        return float_text(obj.ratio)


class ConstantsSerializer(serializers.Serializer):
    z0 = serializers.SerializerMethodField()
    S0 = serializers.SerializerMethodField()
    amplitude = serializers.SerializerMethodField()
    growth = serializers.SerializerMethodField()
    local_coefficient = serializers.SerializerMethodField()

    def get_z0(self, obj):
        return float_text(obj.z0)

    def get_S0(self, obj):
        return float_text(obj.S0)

    def get_amplitude(self, obj):
        return float_text(obj.amplitude)

    def get_growth(self, obj):
        return float_text(obj.growth)

    def get_local_coefficient(self, obj):
        return float_text(obj.local_coefficient)
