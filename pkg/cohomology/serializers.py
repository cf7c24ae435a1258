from rest_framework import serializers

from core.serializers import BitsetListField, LengthVectorField


class BettiSerializer(serializers.Serializer):
    b = serializers.ListField(child=serializers.IntegerField())
    a = serializers.ListField(child=serializers.IntegerField())
    a_tilde = serializers.ListField(child=serializers.IntegerField())
    euler_characteristic = serializers.IntegerField()


class CaseRowSerializer(serializers.Serializer):
    label = serializers.CharField()
    b0 = serializers.IntegerField()
    b1 = serializers.IntegerField(allow_null=True)
    b_top = serializers.IntegerField()


class DefectBasisSerializer(serializers.Serializer):
    """按次数分组的缺陷基单项式（十六进制位图）"""

    def to_representation(self, instance):
        field = BitsetListField()
        return {str(degree): field.to_representation(monos)
                for degree, monos in sorted(instance.by_degree.items())}


class PresentationSerializer(serializers.Serializer):
    lv = LengthVectorField()
    generators = serializers.ListField(child=serializers.CharField())
    minimal_monomials = BitsetListField()
    i_of_ell = serializers.IntegerField()
    ranks = serializers.ListField(child=serializers.IntegerField())
    defect_basis = DefectBasisSerializer(allow_null=True)
    defect_note = serializers.CharField(allow_blank=True)
