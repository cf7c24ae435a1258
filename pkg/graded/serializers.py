from rest_framework import serializers

from core.serializers import BitsetListField, LengthVectorField

from .presentations import Space


class GradedDimsSerializer(serializers.Serializer):
    lv = LengthVectorField()
    space = serializers.ChoiceField(choices=Space.choices)
    dims = serializers.ListField(child=serializers.IntegerField())
    total = serializers.IntegerField()
    euler_characteristic = serializers.IntegerField()
    relations = serializers.CharField()


class W1Serializer(serializers.Serializer):
    lv = LengthVectorField()
    basis = serializers.ListField(child=serializers.CharField())
    w1 = serializers.CharField()
    unique = serializers.BooleanField()
    solution_count = serializers.IntegerField()
    alternatives = serializers.ListField(child=serializers.CharField())
    quotient_dims = serializers.ListField(child=serializers.IntegerField(), allow_null=True)


class SpatialInvariantSerializer(serializers.Serializer):
    dims = serializers.ListField(child=serializers.IntegerField())
    halved_dims = serializers.ListField(child=serializers.IntegerField())
    w1 = serializers.CharField(allow_null=True)
    i_of_ell = serializers.IntegerField(allow_null=True)
    canonical_ideal = BitsetListField()
