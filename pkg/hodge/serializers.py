from rest_framework import serializers

from core.serializers import LengthVectorField
from graded.serializers import SpatialInvariantSerializer


class StageSerializer(serializers.Serializer):
    stage = serializers.CharField()
    left = serializers.JSONField(allow_null=True)
    right = serializers.JSONField(allow_null=True)
    equal = serializers.BooleanField()
    skipped = serializers.CharField(allow_blank=True)


class CompareSerializer(serializers.Serializer):
    lv1 = LengthVectorField()
    lv2 = LengthVectorField()
    verdict = serializers.CharField()
    same = serializers.BooleanField()
    stage = serializers.CharField(allow_null=True)
    stages = StageSerializer(many=True)


class SpatialCompareSerializer(serializers.Serializer):
    lv1 = LengthVectorField()
    lv2 = LengthVectorField()
    same_chamber = serializers.BooleanField()
    stage = serializers.CharField(allow_null=True)
    left = SpatialInvariantSerializer()
    right = SpatialInvariantSerializer()


class AuditReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    chambers = serializers.IntegerField()
    collisions = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    mbar_collisions = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    signature_collisions = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    round_trip_checked = serializers.IntegerField()
    round_trip_failed = serializers.IntegerField()
    round_trip_skipped = serializers.IntegerField()
