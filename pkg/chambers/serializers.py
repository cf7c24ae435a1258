from rest_framework import serializers

from core.serializers import SCHEMA_VERSION, BitsetListField, LengthVectorField, RationalField

from .models import EnumerationRun
from .realizability import ChamberRecord, ChamberSignature


class ChamberRecordSerializer(serializers.Serializer):
    """房室数据库的单行格式"""
    schema_version = serializers.SerializerMethodField()
    n = serializers.IntegerField(min_value=3)
    short_with_n = BitsetListField(source='signature.short_with_n')
    witness = LengthVectorField()
    margin = RationalField()
    normal = serializers.BooleanField()
    betti = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def get_schema_version(self, obj):
        return SCHEMA_VERSION

    def validate(self, data):
        n = data['n']
        if data['witness'].n != n:
            raise serializers.ValidationError(f'见证向量维数 {data["witness"].n} 与 n={n} 不一致')
        if len(data['betti']) != n - 2:
            raise serializers.ValidationError(f'Betti 数应有 {n - 2} 项')
        limit = 1 << (n - 1)
        if any(mask >= limit for mask in data['signature']['short_with_n']):
            raise serializers.ValidationError('签名位图超出 {1..n-1}')
        return data

    def create(self, validated_data):
        n = validated_data['n']
        return ChamberRecord(
            signature=ChamberSignature(n=n, short_with_n=validated_data['signature']['short_with_n']),
            witness=validated_data['witness'],
            margin=validated_data['margin'],
            normal=validated_data['normal'],
            betti=tuple(validated_data['betti']),
        )


class EnumerationRunSerializer(serializers.ModelSerializer):
    status_display = serializers.CharField(source='get_status_display', read_only=True)
    completed_count = serializers.SerializerMethodField()

    class Meta:
        model = EnumerationRun
        fields = [
            'id', 'n', 'output_path', 'status', 'status_display', 'split_depth', 'partial_lp',
            'total_tasks', 'completed_count', 'chamber_count', 'normal_count',
            'leaf_count', 'lp_calls', 'started_at', 'finished_at',
        ]

    def get_completed_count(self, obj):
        return len(obj.completed_tasks or [])


class EnumerationSummarySerializer(serializers.Serializer):
    n = serializers.IntegerField()
    chamber_count = serializers.IntegerField()
    normal_count = serializers.IntegerField()
    published = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    matches_published = serializers.BooleanField(allow_null=True)
    note = serializers.CharField(allow_blank=True)
    output = serializers.CharField()
    run = EnumerationRunSerializer()


class VolumeEstimateSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    samples = serializers.IntegerField()
    seed = serializers.IntegerField()
    nonnormal = serializers.IntegerField()
    fraction = RationalField()
    half_width = serializers.CharField()
    bound = RationalField()
    below_bound = serializers.BooleanField()


class TableRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    c_n = serializers.IntegerField()
    c_n_star = serializers.IntegerField()
    published_c_n = serializers.IntegerField(allow_null=True)
    published_c_n_star = serializers.IntegerField(allow_null=True)
    matches_published = serializers.BooleanField(allow_null=True)
    source = serializers.CharField()
    note = serializers.CharField(allow_blank=True)
