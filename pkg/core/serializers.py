from django.conf import settings
from rest_framework import serializers

from .exceptions import LengthVectorError
from .lengths import LengthVector, format_rational, parse_rational
from .subsets import hex_mask, parse_hex_mask

SCHEMA_VERSION = 1


class RationalField(serializers.Field):
    """有理数以 "p/q" 字符串进出，不经过浮点数"""

    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except LengthVectorError as exc:
            raise serializers.ValidationError(exc.message)


class LengthVectorField(serializers.Field):
    default_error_messages = {
        'invalid': '长度向量必须是 "a/b,c/d" 字符串或有理数字符串数组',
    }

    def to_representation(self, value: LengthVector):
        return value.as_strings()

    def to_internal_value(self, data):
        try:
            if isinstance(data, str):
                return LengthVector.parse(data, max_n=settings.POLYSPACE_MAX_N)
            if isinstance(data, (list, tuple)):
                return LengthVector.of(data, max_n=settings.POLYSPACE_MAX_N)
        except LengthVectorError as exc:
            raise serializers.ValidationError(exc.message)
        self.fail('invalid')


class BitsetListField(serializers.Field):
    """位图族序列化为按数值升序排列的十六进制字符串列表"""

    def to_representation(self, value):
        return [hex_mask(mask) for mask in sorted(value)]

    def to_internal_value(self, data):
        if not isinstance(data, list):
            raise serializers.ValidationError('位图族必须是十六进制字符串数组')
        try:
            return frozenset(parse_hex_mask(item) for item in data)
        except (TypeError, ValueError):
            raise serializers.ValidationError('无法解析的十六进制位图')


class SignatureSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    generic = serializers.BooleanField(read_only=True)
    permutation = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    short_without_n = BitsetListField()
    short_with_n = BitsetListField()
    median_with_n = BitsetListField()


class VectorInputSerializer(serializers.Serializer):
    """命令行输入校验：一个或两个长度向量"""
    lv = LengthVectorField()
    lv2 = LengthVectorField(required=False)

    def validate(self, data):
        other = data.get('lv2')
        if other is not None and other.n != data['lv'].n:
            raise serializers.ValidationError(f'两个向量维数不一致: {data["lv"].n} 与 {other.n}')
        return data


class ClassifySerializer(serializers.Serializer):
    lv = LengthVectorField()
    ordered = LengthVectorField()
    permutation = serializers.ListField(child=serializers.IntegerField())
    generic = serializers.BooleanField()
    normal = serializers.BooleanField()
    empty = serializers.BooleanField()
    top_class = serializers.CharField()
    pair_class = serializers.CharField()
    signature = SignatureSerializer()
    same_stratum = serializers.BooleanField(read_only=True)


class ErrorSerializer(serializers.Serializer):
    code = serializers.CharField()
    message = serializers.CharField()
    exit_code = serializers.IntegerField()


def first_error(errors) -> str:
    """取 DRF 校验错误中的第一条信息"""
    if isinstance(errors, dict):
        for key, value in errors.items():
            text = first_error(value)
            return text if key == 'non_field_errors' else f'{key}: {text}'
    if isinstance(errors, list) and errors:
        return first_error(errors[0])
    return str(errors)
